#pragma once

// Expected results for every class-number-2 and class-number-3 field, and a
// recompute-and-diff driver over them.

#include <string>
#include <vector>

#include "hermsum/repsearch.hpp"

namespace hermsum {

// One row of the published result tables.
struct PaperTable {
  Int d = 0;
  int class_number = 0;
  std::vector<Int> k_per_class;  // index 0 is the principal class (k = 1)
  int expected_g = 0;
  Int threshold = 1;                // smallest representable r
  std::vector<Int> listed_exceptions;  // the "r != ..." list, all >= threshold

  // All unrepresentable r: 1..threshold-1 followed by listed_exceptions.
  [[nodiscard]] std::vector<Int> expected_exceptions() const;
  [[nodiscard]] Int largest_exception() const;
};

// Throws InvalidArgument / UnsupportedField unless d has class number 2 or 3.
[[nodiscard]] PaperTable expected_table(Int d);

// "d=13 k=2 r>=2 r!=3,5 g=4"
[[nodiscard]] std::string row_string(const PaperTable& row);

struct ClassDiff {
  int class_index = 0;
  std::vector<Int> computed_exceptions;
  std::vector<Int> missing;     // expected exceptional, computed representable
  std::vector<Int> unexpected;  // computed exceptional, expected representable
};

struct FieldReport {
  Int d = 0;
  int class_number = 0;
  int g_expected = 0;
  int g_computed = 0;
  LatticeQuery g_witness;
  bool stable = false;
  bool exceptions_match = false;
  bool lemma4_agree = true;  // class 2 and 3 min_terms coincide (class-3 fields)
  std::vector<ClassDiff> classes;
  std::vector<std::string> mismatches;

  [[nodiscard]] bool match() const { return mismatches.empty(); }
};

// Requires r_max > the largest listed exception; throws PreconditionViolation.
[[nodiscard]] FieldReport verify_field(Int d, Int r_max, const SearchOptions& opts = {});

struct DiffReport {
  int class_number = 0;
  Int r_max = 0;
  std::vector<FieldReport> fields;
  double runtime_seconds = 0.0;

  [[nodiscard]] std::size_t matched() const;
  [[nodiscard]] bool all_match() const { return matched() == fields.size(); }
  [[nodiscard]] bool all_stable() const;
};

// Checks every field's precondition first (the error names all offenders),
// then verifies fields on `jobs` worker threads (0 = hardware concurrency).
[[nodiscard]] DiffReport verify_all(int class_number, Int r_max, unsigned jobs = 1,
                                    const SearchOptions& opts = {});

}  // namespace hermsum
