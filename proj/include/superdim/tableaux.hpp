#pragma once

// Semistandard hook tableaux for covariant highest weights.
//
// The alphabet is 1 < 2 < ... < m < 1' < 2' < ... < n'.  A filling of the
// Young diagram of a partition is admissible when rows and columns weakly
// increase, unprimed letters increase strictly down columns, and primed
// letters increase strictly along rows.  Such fillings exist exactly when
// the partition fits in the (m, n) hook, i.e. lambda_{m+1} <= n.
//
// Each tableau contributes +1 to the plain count and (-1)^(number of primed
// entries) to the signed count, so the two totals match the character and
// supercharacter of the corresponding covariant module evaluated at zero.

#include <cstdint>
#include <vector>

#include "superdim/basics.hpp"
#include "superdim/weights.hpp"

namespace superdim {

struct Partition {
  std::vector<std::int64_t> parts;  // weakly decreasing, positive

  explicit Partition(std::vector<std::int64_t> p);
  std::int64_t cells() const;
  std::vector<std::int64_t> conjugate() const;
};

// true when the diagram of lambda fits in the (m, n) hook
bool fits_hook(const Partition& lambda, int m, int n);

// highest weight of the covariant module indexed by lambda;
// throws HookViolationError when the partition does not fit
SuperWeight covariant_weight(const Partition& lambda, int m, int n);

struct TableauCounts {
  BigInt total;   // number of admissible fillings
  BigInt signed_total;  // fillings weighted by parity of the primed-entry count
};

// enumerate all admissible fillings by backtracking; the cell cap keeps the
// search affordable and raises BoundExceededError when exceeded
TableauCounts count_hook_tableaux(const Partition& lambda, int m, int n,
                                  std::int64_t max_cells = 12);

}  // namespace superdim
