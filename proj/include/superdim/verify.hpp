#pragma once

// Cross-check suites shared by the command line tool and the test drivers:
// closed-form families, the alternating multinomial identity, the
// character-engine equivalence sweep, and the three-way covariant check.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "superdim/basics.hpp"
#include "superdim/charformula.hpp"
#include "superdim/tableaux.hpp"
#include "superdim/weights.hpp"

namespace superdim {

struct VerifyOptions {
  std::vector<std::pair<int, int>> shapes;  // empty: suite defaults apply
  int max_m = 0;                            // >0: derive shapes from bounds instead
  int max_n = 0;
  int entry_bound = 2;      // engine sweep weight entries live in [-bound, bound]
  std::int64_t cutoff = 0;  // 0: per-weight default
  int margin = 5;
  int max_r = 10;               // lemma2 sweep upper bound
  std::int64_t max_cells = 8;   // tableaux sweep partition size bound
  std::int64_t weyl_guard = 10000;  // refuse shapes with m! n! beyond this
  std::string dump_dir;         // nonempty: write per-case character JSON here
};

struct CaseResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  std::vector<CaseResult> cases;
  int failures() const;
  bool ok() const { return failures() == 0; }
};

// all dominant integral weights of shape (m, n) with entries in [-bound, bound]
std::vector<SuperWeight> enumerate_dominant_weights(int m, int n, int bound);

// all partitions with at most max_cells cells (the empty one included) that
// fit in the (m, n) hook
std::vector<Partition> enumerate_hook_partitions(int m, int n, std::int64_t max_cells);

// evaluate_at_zero on build(w, cutoff), retrying with a doubled cutoff up to
// three times when the cancellation shell is not clean
BigInt evaluate_with_retry(
    const std::function<FormalCharacter(const SuperWeight&, std::int64_t)>& build,
    const SuperWeight& w, std::int64_t cutoff, int margin,
    const std::string& dump_path = "");

SuiteResult run_formula_suite(const VerifyOptions& opts);
SuiteResult run_lemma2_suite(const VerifyOptions& opts);
SuiteResult run_engine_suite(const VerifyOptions& opts);
SuiteResult run_tableaux_suite(const VerifyOptions& opts);

// one PASS/FAIL line per case plus a summary line; returns suite.ok()
bool print_suite(std::ostream& os, const SuiteResult& suite);

}  // namespace superdim
