#include "hermsum/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <iterator>
#include <mutex>
#include <sstream>
#include <thread>

#include "hermsum/errors.hpp"

namespace hermsum {
namespace {

struct Row {
  Int d;
  int g;
  Int threshold;
  std::vector<Int> listed;
};

// Transcribed row by row; counts are pinned in tests.
const std::vector<Row>& class_two_rows() {
  static const std::vector<Row> rows = {
      {5, 3, 2, {}},
      {6, 3, 2, {}},
      {10, 4, 2, {3}},
      {13, 4, 2, {3, 5}},
      {15, 3, 2, {}},
      {22, 4, 2, {3, 5, 7, 9}},
      {35, 4, 3, {4}},
      {37, 4, 2, {3, 5, 7, 9, 11, 13, 15, 17}},
      {51, 4, 3, {4, 7}},
      {58, 4, 2, {3, 5, 7, 9, 11, 13, 15, 17, 19, 21, 23, 25, 27}},
      {91, 4, 5, {6, 8, 9, 11, 16}},
      {115, 4, 5, {6, 8, 9, 11, 13, 16, 18}},
      {123, 4, 3, {4, 5, 7, 8, 10, 13, 16, 19}},
      {187, 4, 7, {8, 9, 10, 12, 13, 15, 16, 19, 20, 23, 26, 27, 30, 37}},
      {235, 4, 5, {6, 7, 8, 9, 11, 12, 14, 16, 17, 19, 21, 22, 24, 27, 29, 32, 34, 37, 42}},
      {267, 4, 3, {4, 5, 7, 8, 10, 11, 13, 14, 16, 17, 19, 20, 22, 25, 28, 31, 34, 37, 40, 43}},
      {403, 4, 11, {12, 14, 15, 16, 17, 18, 19, 20, 21, 23, 25, 27, 28, 29, 30, 32, 34,
                    36, 38, 40, 41, 43, 45, 47, 49, 51, 54, 56, 58, 60, 67, 69, 71, 80, 82}},
      {427, 4, 7, {8,  9,  10, 11, 12, 13, 15, 16, 18, 19, 20, 22, 23, 25, 26, 27, 29, 30, 32, 33,
                   36, 37, 39, 40, 43, 44, 46, 47, 50, 53, 54, 57, 60, 64, 67, 71, 74, 81, 88}},
  };
  return rows;
}

const std::vector<Row>& class_three_rows() {
  static const std::vector<Row> rows = {
      {23, 3, 2, {}},
      {31, 4, 2, {3}},
      {59, 4, 3, {4}},
      {83, 4, 3, {4, 5, 8}},
      {107, 4, 3, {4, 5, 7, 8, 10}},
      {139, 4, 5, {6, 8, 9}},
      {211, 4, 5, {6, 7, 8, 9, 12, 14, 17}},
      {283, 4, 7, {8, 9, 10, 12, 15, 16, 17, 19}},
      {307, 4, 7, {8, 9, 10, 12, 13, 15, 16, 20, 23, 27}},
      {331, 4, 5, {6, 7, 8, 9, 11, 12, 13, 14, 16, 18, 21, 23, 26, 28, 33}},
      {379, 4, 5, {6, 7, 8, 9, 11, 12, 13, 14, 16, 17, 18, 21, 22, 26, 27, 31, 32, 36}},
      {499, 4, 5, {6,  7,  8,  9,  11, 12, 13, 14, 16, 17, 18, 19,
                   21, 22, 23, 24, 26, 27, 28, 32, 33, 37, 38, 42}},
      {547, 4, 11, {12, 14, 15, 16, 17, 18, 20, 21, 23, 25, 27, 28, 31, 34, 36}},
      {643, 4, 7, {8,  9,  10, 11, 12, 13, 15, 16, 17, 18, 19, 20, 22,
                   24, 25, 26, 27, 32, 33, 34, 39, 40, 41, 47, 48, 55}},
      {883, 4, 13, {14, 15, 16, 18, 19, 20, 21, 22, 23, 24, 25, 27, 28, 32,
                    33, 35, 36, 37, 38, 40, 41, 45, 49, 50, 53, 54, 66}},
      {907, 5, 13, {14, 15, 16, 17, 18, 20, 21, 22, 24, 25, 27, 28, 29, 30,
                    31, 33, 34, 35, 37, 40, 43, 44, 47, 48, 50, 56, 63}},
  };
  return rows;
}

std::string join(const std::vector<Int>& xs) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(xs[i]);
  }
  return out;
}

std::vector<Int> difference(const std::vector<Int>& a, const std::vector<Int>& b) {
  std::vector<Int> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

}  // namespace

std::vector<Int> PaperTable::expected_exceptions() const {
  std::vector<Int> out;
  for (Int r = 1; r < threshold; ++r) out.push_back(r);
  out.insert(out.end(), listed_exceptions.begin(), listed_exceptions.end());
  return out;
}

Int PaperTable::largest_exception() const {
  const auto all = expected_exceptions();
  return all.empty() ? 0 : all.back();
}

PaperTable expected_table(Int d) {
  const FieldParams f = make_field(d);
  if (f.class_number == 1) {
    throw InvalidArgument("d=" + std::to_string(d) + " has class number 1; no table row");
  }
  const auto& rows = f.class_number == 2 ? class_two_rows() : class_three_rows();
  const auto it = std::find_if(rows.begin(), rows.end(), [&](const Row& r) { return r.d == d; });
  if (it == rows.end()) throw UnsupportedField("no table row for d=" + std::to_string(d));

  PaperTable t;
  t.d = d;
  t.class_number = f.class_number;
  for (const auto& rep : class_reps(f)) t.k_per_class.push_back(rep.k);
  t.expected_g = it->g;
  t.threshold = it->threshold;
  t.listed_exceptions = it->listed;
  return t;
}

std::string row_string(const PaperTable& row) {
  std::string out = "d=" + std::to_string(row.d) + " k=" + std::to_string(row.k_per_class.at(1)) +
                    " r>=" + std::to_string(row.threshold);
  if (!row.listed_exceptions.empty()) out += " r!=" + join(row.listed_exceptions);
  out += " g=" + std::to_string(row.expected_g);
  return out;
}

FieldReport verify_field(Int d, Int r_max, const SearchOptions& opts) {
  const PaperTable expected = expected_table(d);
  if (r_max <= expected.largest_exception() || r_max < 2) {
    throw PreconditionViolation("d=" + std::to_string(d) + ": r_max=" + std::to_string(r_max) +
                                " must exceed the largest expected exception " +
                                std::to_string(expected.largest_exception()));
  }
  const FieldParams f = make_field(d);

  FieldReport rep;
  rep.d = d;
  rep.class_number = f.class_number;
  rep.g_expected = expected.expected_g;

  const auto want = expected.expected_exceptions();
  std::vector<MinTermsTable> tables;
  for (int c = 1; c <= f.class_number; ++c) {
    tables.emplace_back(f, c, r_max, opts);
    ClassDiff diff;
    diff.class_index = c;
    for (Int r = 1; r <= r_max; ++r) {
      if (!tables.back().at(r).representable()) diff.computed_exceptions.push_back(r);
    }
    const std::vector<Int> target = c == 1 ? std::vector<Int>{} : want;
    diff.missing = difference(target, diff.computed_exceptions);
    diff.unexpected = difference(diff.computed_exceptions, target);
    for (const Int r : diff.missing) {
      rep.mismatches.push_back("class " + std::to_string(c) + " r=" + std::to_string(r) +
                               ": expected unrepresentable, computed representable");
    }
    for (const Int r : diff.unexpected) {
      rep.mismatches.push_back("class " + std::to_string(c) + " r=" + std::to_string(r) +
                               ": expected representable, computed unrepresentable");
    }
    rep.classes.push_back(std::move(diff));
  }
  rep.exceptions_match = rep.mismatches.empty();

  if (f.class_number == 3) {
    for (Int r = 1; r <= r_max; ++r) {
      if (tables[1].at(r) != tables[2].at(r)) {
        rep.lemma4_agree = false;
        rep.mismatches.push_back("r=" + std::to_string(r) +
                                 ": classes 2 and 3 need different numbers of norms");
      }
    }
  }

  const GInvariant g = g_invariant(f, r_max, opts);
  rep.g_computed = g.g;
  rep.g_witness = g.witness;
  rep.stable = g.stable;
  if (g.g != expected.expected_g) {
    rep.mismatches.push_back("g: expected " + std::to_string(expected.expected_g) + ", computed " +
                             std::to_string(g.g) + " (witness class " +
                             std::to_string(g.witness.class_index) + " r=" +
                             std::to_string(g.witness.r) + ")");
  }
  if (!g.stable) rep.mismatches.push_back("g not stable on the upper half of the r window");
  return rep;
}

std::size_t DiffReport::matched() const {
  return static_cast<std::size_t>(
      std::count_if(fields.begin(), fields.end(), [](const FieldReport& f) { return f.match(); }));
}

bool DiffReport::all_stable() const {
  return std::all_of(fields.begin(), fields.end(), [](const FieldReport& f) { return f.stable; });
}

DiffReport verify_all(int class_number, Int r_max, unsigned jobs, const SearchOptions& opts) {
  if (class_number != 2 && class_number != 3) {
    throw InvalidArgument("verify covers class number 2 or 3, got " + std::to_string(class_number));
  }
  const auto start = std::chrono::steady_clock::now();
  const auto fields = supported_fields(class_number);

  std::vector<std::string> offenders;
  for (const Int d : fields) {
    const PaperTable t = expected_table(d);
    if (r_max <= t.largest_exception() || r_max < 2) {
      offenders.push_back("d=" + std::to_string(d) + " (exception " +
                          std::to_string(t.largest_exception()) + " > " + std::to_string(r_max) + ")");
    }
  }
  if (!offenders.empty()) {
    std::string msg = "r_max too small for";
    for (const auto& o : offenders) msg += " " + o;
    throw PreconditionViolation(msg);
  }

  DiffReport report;
  report.class_number = class_number;
  report.r_max = r_max;
  report.fields.resize(fields.size());

  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = std::min<unsigned>(jobs, static_cast<unsigned>(fields.size()));

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto worker = [&] {
    for (std::size_t i = next++; i < fields.size(); i = next++) {
      try {
        report.fields[i] = verify_field(fields[i], r_max, opts);
      } catch (...) {
        const std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace hermsum
