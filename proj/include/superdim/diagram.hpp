#pragma once

#include "superdim/weights.hpp"

namespace superdim {

// Weight diagram on the integer line: one symbol per position in [lo, hi],
// Cross where a value appears in both a and b, Gt for a only, Lt for b only,
// Circ otherwise (and implicitly outside the window).  Crosses are numbered
// 1..r from left to right; they sit at the matched values, in the same order
// as the gamma pairs.  Strong connectivity of crosses is the nesting relation
// an arc presentation of the same data would show; only the counting rule is
// implemented here.
struct WeightDiagram {
  enum class Symbol : char { Circ = 'o', Cross = 'x', Gt = '>', Lt = '<' };

  std::int64_t lo = 0;
  std::int64_t hi = -1;
  std::vector<Symbol> symbols;                 // size hi - lo + 1
  std::vector<std::int64_t> cross_positions;   // strictly increasing

  int r() const { return static_cast<int>(cross_positions.size()); }
  Symbol at(std::int64_t pos) const;
};

WeightDiagram build_diagram(const RhoShiftedWeight& rs);

// k <= l, 1-based cross numbers.  True iff for every i with k < i <= l the
// number of circles strictly between cross k and cross i is at most the
// number of crosses strictly between them.
bool strongly_connected(const WeightDiagram& d, int k, int l);

// Largest t <= r with crosses s and t strongly connected (t >= s always).
int max_s(const WeightDiagram& d, int s);

// r! / prod_s (max_s - s + 1); the division is exact.
BigInt s_lambda(const WeightDiagram& d);

// All sigma in Sym_r with sigma^{-1}(s) < sigma^{-1}(t) whenever s < t are
// strongly connected, as 1-based image sequences in lexicographic order.
// Throws BoundExceeded for r > bound.
std::vector<std::vector<int>> enumerate_S_Lambda(const WeightDiagram& d, int bound = 8);

// Two-row ASCII picture over the window [lo-1, hi+1]: symbols above position
// labels.
std::string render(const WeightDiagram& d);

}  // namespace superdim
