#include "superdim/tableaux.hpp"

#include <algorithm>

namespace superdim {

Partition::Partition(std::vector<std::int64_t> p) : parts(std::move(p)) {
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] <= 0) throw NotDominantError("partition parts must be positive");
    if (k > 0 && parts[k] > parts[k - 1])
      throw NotDominantError("partition parts must weakly decrease");
  }
}

std::int64_t Partition::cells() const {
  std::int64_t s = 0;
  for (auto p : parts) s += p;
  return s;
}

std::vector<std::int64_t> Partition::conjugate() const {
  if (parts.empty()) return {};
  std::vector<std::int64_t> out(parts[0], 0);
  for (auto p : parts)
    for (std::int64_t j = 0; j < p; ++j) ++out[j];
  return out;
}

bool fits_hook(const Partition& lambda, int m, int n) {
  return static_cast<int>(lambda.parts.size()) <= m ||
         lambda.parts[m] <= static_cast<std::int64_t>(n);
}

SuperWeight covariant_weight(const Partition& lambda, int m, int n) {
  if (!fits_hook(lambda, m, n))
    throw HookViolationError("partition does not fit in the hook for this shape");
  Wvec c(m, 0), d(n, 0);
  for (int i = 0; i < m && i < static_cast<int>(lambda.parts.size()); ++i)
    c[i] = lambda.parts[i];
  auto conj = lambda.conjugate();
  for (int j = 0; j < n && j < static_cast<int>(conj.size()); ++j)
    d[j] = -std::max<std::int64_t>(conj[j] - m, 0);
  return SuperWeight(m, n, c, d);
}

namespace {

// letters 1..m are the unprimed alphabet, m+1..m+n the primed one
struct Searcher {
  int m, n;
  const std::vector<std::int64_t>& rows;
  std::vector<std::vector<int>> fill;
  BigInt total = 0, signed_total = 0;
  int primed = 0;

  Searcher(int m_, int n_, const std::vector<std::int64_t>& rows_) : m(m_), n(n_), rows(rows_) {
    fill.resize(rows.size());
    for (std::size_t r = 0; r < rows.size(); ++r) fill[r].assign(rows[r], 0);
  }

  bool admissible(int r, int c, int x) const {
    if (c > 0) {
      int left = fill[r][c - 1];
      if (x < left) return false;
      if (x == left && left > m) return false;  // primed letters strict in rows
    }
    if (r > 0) {
      int up = fill[r - 1][c];
      if (x < up) return false;
      if (x == up && up <= m) return false;  // unprimed letters strict in columns
    }
    return true;
  }

  void run(int r, int c) {
    if (r == static_cast<int>(rows.size())) {
      total += 1;
      signed_total += (primed % 2 == 0) ? 1 : -1;
      return;
    }
    int nr = r, nc = c + 1;
    if (static_cast<std::int64_t>(nc) == rows[r]) {
      nr = r + 1;
      nc = 0;
    }
    for (int x = 1; x <= m + n; ++x) {
      if (!admissible(r, c, x)) continue;
      fill[r][c] = x;
      if (x > m) ++primed;
      run(nr, nc);
      if (x > m) --primed;
    }
    fill[r][c] = 0;
  }
};

}  // namespace

TableauCounts count_hook_tableaux(const Partition& lambda, int m, int n,
                                  std::int64_t max_cells) {
  if (!fits_hook(lambda, m, n))
    throw HookViolationError("partition does not fit in the hook for this shape");
  if (lambda.cells() > max_cells)
    throw BoundExceededError("partition has more cells than the enumeration cap");
  if (lambda.parts.empty()) return {1, 1};
  Searcher s(m, n, lambda.parts);
  s.run(0, 0);
  return {s.total, s.signed_total};
}

}  // namespace superdim
