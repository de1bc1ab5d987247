#include "superdim/weights.hpp"

#include <algorithm>
#include <sstream>

namespace superdim {

BigInt factorial(int k) {
  if (k < 0) throw IndexOutOfRangeError("factorial of negative argument");
  BigInt f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

SuperWeight::SuperWeight(int m_, int n_, Wvec c_, Wvec d_)
    : m(m_), n(n_), c(std::move(c_)), d(std::move(d_)) {
  if (m < 1) throw UnsupportedShapeError("gl(m|n) needs m >= 1, got m = " + std::to_string(m));
  if (n < 0) throw UnsupportedShapeError("gl(m|n) needs n >= 0, got n = " + std::to_string(n));
  if (static_cast<int>(c.size()) != m || static_cast<int>(d.size()) != n)
    throw DimensionMismatchError("weight has " + std::to_string(c.size()) + "|" +
                                 std::to_string(d.size()) + " entries, shape says " +
                                 std::to_string(m) + "|" + std::to_string(n));
}

Wvec SuperWeight::raw() const {
  Wvec v;
  v.reserve(m + n);
  v.insert(v.end(), c.begin(), c.end());
  for (auto x : d) v.push_back(-x);
  return v;
}

std::string dominance_violation(const SuperWeight& w) {
  for (int i = 0; i + 1 < w.m; ++i)
    if (w.c[i] < w.c[i + 1]) {
      std::ostringstream os;
      os << "c[" << i + 1 << "] = " << w.c[i] << " < c[" << i + 2 << "] = " << w.c[i + 1]
         << " (left entries must weakly decrease)";
      return os.str();
    }
  for (int j = 0; j + 1 < w.n; ++j)
    if (w.d[j] > w.d[j + 1]) {
      std::ostringstream os;
      os << "d[" << j + 1 << "] = " << w.d[j] << " > d[" << j + 2 << "] = " << w.d[j + 1]
         << " (right entries must weakly increase)";
      return os.str();
    }
  return {};
}

bool is_dominant(const SuperWeight& w) { return dominance_violation(w).empty(); }

SuperWeight str_shift(const SuperWeight& w, std::int64_t t) {
  Wvec c = w.c, d = w.d;
  for (auto& x : c) x += t;
  for (auto& x : d) x += t;
  return SuperWeight(w.m, w.n, std::move(c), std::move(d));
}

RhoShiftedWeight::RhoShiftedWeight(Wvec a_, Wvec b_) : a(std::move(a_)), b(std::move(b_)) {
  m = static_cast<int>(a.size());
  n = static_cast<int>(b.size());
  if (m < 1) throw UnsupportedShapeError("rho-shifted weight needs at least one eps entry");
  if (m < n)
    throw UnsupportedShapeError("shape m|n = " + std::to_string(m) + "|" + std::to_string(n) +
                                " not supported, need m >= n");
  for (int i = 0; i + 1 < m; ++i)
    if (a[i] <= a[i + 1])
      throw NotDominantError("rho-shifted a must be strictly decreasing, a[" +
                             std::to_string(i + 1) + "] = " + std::to_string(a[i]) +
                             " <= a[" + std::to_string(i + 2) + "] = " + std::to_string(a[i + 1]));
  for (int j = 0; j + 1 < n; ++j)
    if (b[j] >= b[j + 1])
      throw NotDominantError("rho-shifted b must be strictly increasing, b[" +
                             std::to_string(j + 1) + "] = " + std::to_string(b[j]) +
                             " >= b[" + std::to_string(j + 2) + "] = " + std::to_string(b[j + 1]));
}

Wvec RhoShiftedWeight::raw() const {
  Wvec v;
  v.reserve(m + n);
  v.insert(v.end(), a.begin(), a.end());
  for (auto x : b) v.push_back(-x);
  return v;
}

RhoShiftedWeight rho_shift(const SuperWeight& w) {
  auto why = dominance_violation(w);
  if (!why.empty()) throw NotDominantError("weight is not dominant: " + why);
  Wvec a(w.m), b(w.n);
  for (int i = 0; i < w.m; ++i) a[i] = w.c[i] + (w.m - i);
  for (int j = 0; j < w.n; ++j) b[j] = w.d[j] + (j + 1);
  return RhoShiftedWeight(std::move(a), std::move(b));
}

SuperWeight unshift(const RhoShiftedWeight& rs) {
  Wvec c(rs.m), d(rs.n);
  for (int i = 0; i < rs.m; ++i) c[i] = rs.a[i] - (rs.m - i);
  for (int j = 0; j < rs.n; ++j) d[j] = rs.b[j] - (j + 1);
  return SuperWeight(rs.m, rs.n, std::move(c), std::move(d));
}

Wvec Root::raw(int m, int n) const {
  Wvec v(m + n, 0);
  switch (kind) {
    case Kind::EvenEps:
      if (i < 1 || j < 1 || i > m || j > m || i == j)
        throw IndexOutOfRangeError("eps root indices out of range");
      v[i - 1] = 1;
      v[j - 1] = -1;
      break;
    case Kind::EvenDelta:
      if (i < 1 || j < 1 || i > n || j > n || i == j)
        throw IndexOutOfRangeError("delta root indices out of range");
      v[m + i - 1] = 1;
      v[m + j - 1] = -1;
      break;
    case Kind::Odd:
      if (i < 1 || i > m || j < 1 || j > n)
        throw IndexOutOfRangeError("odd root indices out of range");
      v[i - 1] = 1;
      v[m + j - 1] = -1;
      break;
  }
  return v;
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  switch (r.kind) {
    case Root::Kind::EvenEps: os << "eps" << r.i << "-eps" << r.j; break;
    case Root::Kind::EvenDelta: os << "delta" << r.i << "-delta" << r.j; break;
    case Root::Kind::Odd: os << "eps" << r.i << "-delta" << r.j; break;
  }
  return os.str();
}

GammaSet gamma_set(const RhoShiftedWeight& rs) {
  GammaSet g;
  // a is strictly decreasing; for each b_j scan for an equal a_i.
  for (int j = 0; j < rs.n; ++j) {
    auto it = std::lower_bound(rs.a.begin(), rs.a.end(), rs.b[j], std::greater<std::int64_t>());
    if (it != rs.a.end() && *it == rs.b[j])
      g.pairs.push_back({static_cast<int>(it - rs.a.begin()) + 1, j + 1});
  }
  return g;
}

int atypicality(const RhoShiftedWeight& rs) { return gamma_set(rs).size(); }

bool is_maximal(const RhoShiftedWeight& rs) { return atypicality(rs) == rs.n; }

std::vector<Root> m_lambda_positive(const RhoShiftedWeight& rs, const GammaSet& g) {
  std::vector<bool> eps_used(rs.m + 1, false), delta_used(rs.n + 1, false);
  for (const auto& p : g.pairs) {
    if (p.i < 1 || p.i > rs.m || p.j < 1 || p.j > rs.n)
      throw IndexOutOfRangeError("gamma pair out of range");
    eps_used[p.i] = true;
    delta_used[p.j] = true;
  }
  std::vector<Root> roots;
  for (int i = 1; i <= rs.m; ++i) {
    if (eps_used[i]) continue;
    for (int k = i + 1; k <= rs.m; ++k)
      if (!eps_used[k]) roots.push_back({Root::Kind::EvenEps, i, k});
  }
  for (int j = 1; j <= rs.n; ++j) {
    if (delta_used[j]) continue;
    for (int l = j + 1; l <= rs.n; ++l)
      if (!delta_used[l]) roots.push_back({Root::Kind::EvenDelta, j, l});
  }
  return roots;
}

std::vector<BigRat> rho0_lambda(const std::vector<Root>& mplus, int m, int n) {
  std::vector<BigRat> v(m + n, BigRat(0));
  for (const auto& r : mplus) {
    Wvec raw = r.raw(m, n);
    for (int k = 0; k < m + n; ++k)
      if (raw[k] != 0) v[k] += BigRat(raw[k], 2);
  }
  return v;
}

namespace {

template <typename X, typename Y>
BigRat bilinear_impl(const X& x, const Y& y, int m) {
  if (x.size() != y.size())
    throw DimensionMismatchError("bilinear form on vectors of lengths " +
                                 std::to_string(x.size()) + " and " + std::to_string(y.size()));
  if (m < 0 || m > static_cast<int>(x.size()))
    throw IndexOutOfRangeError("eps block size out of range");
  BigRat s = 0;
  for (int k = 0; k < static_cast<int>(x.size()); ++k) {
    BigRat t = BigRat(x[k]) * BigRat(y[k]);
    if (k < m)
      s += t;
    else
      s -= t;
  }
  return s;
}

template <typename X>
BigRat coroot_impl(const X& x, const Root& alpha, int m) {
  // For eps_i - eps_k the coroot pairing is x_i - x_k; for delta_j - delta_l
  // the form's sign and the coroot's sign cancel, giving the same raw
  // difference x_{m+j} - x_{m+l}.
  switch (alpha.kind) {
    case Root::Kind::EvenEps:
      return BigRat(x[alpha.i - 1]) - BigRat(x[alpha.j - 1]);
    case Root::Kind::EvenDelta:
      return BigRat(x[m + alpha.i - 1]) - BigRat(x[m + alpha.j - 1]);
    case Root::Kind::Odd:
      throw InternalError("isotropic odd root has no coroot");
  }
  throw InternalError("unreachable");
}

}  // namespace

BigRat bilinear(const Wvec& x, const Wvec& y, int m) { return bilinear_impl(x, y, m); }
BigRat bilinear(const std::vector<BigRat>& x, const std::vector<BigRat>& y, int m) {
  return bilinear_impl(x, y, m);
}

BigRat inner_coroot(const Wvec& x, const Root& alpha, int m) { return coroot_impl(x, alpha, m); }
BigRat inner_coroot(const std::vector<BigRat>& x, const Root& alpha, int m) {
  return coroot_impl(x, alpha, m);
}

}  // namespace superdim
