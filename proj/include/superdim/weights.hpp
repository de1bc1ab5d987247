#pragma once

#include "superdim/basics.hpp"

namespace superdim {

// Integral weight of gl(m|n) in the display notation (c_1..c_m | d_1..d_n),
// i.e. sum c_i eps_i - sum d_j delta_j.  Dominance means c weakly decreasing
// and d weakly increasing.
struct SuperWeight {
  int m = 1;
  int n = 0;
  Wvec c;  // size m
  Wvec d;  // size n

  SuperWeight(int m_, int n_, Wvec c_, Wvec d_);
  Wvec raw() const;
  bool operator==(const SuperWeight&) const = default;
};

bool is_dominant(const SuperWeight& w);

// Explains the first dominance violation, empty if dominant.
std::string dominance_violation(const SuperWeight& w);

// Lambda + t*str where str = (1,..,1 | 1,..,1).
SuperWeight str_shift(const SuperWeight& w, std::int64_t t);

// Lambda + rho in the integral normalization: a_i = c_i + (m - i + 1) strictly
// decreasing, b_j = d_j + j strictly increasing.  Only shapes with m >= n are
// supported downstream, enforced here.
struct RhoShiftedWeight {
  int m = 1;
  int n = 0;
  Wvec a;  // size m
  Wvec b;  // size n

  RhoShiftedWeight(Wvec a_, Wvec b_);
  Wvec raw() const;
  bool operator==(const RhoShiftedWeight&) const = default;
};

RhoShiftedWeight rho_shift(const SuperWeight& w);

// Recovers the weight with rho_shift(result) == rs.
SuperWeight unshift(const RhoShiftedWeight& rs);

struct Root {
  enum class Kind { EvenEps, EvenDelta, Odd };
  Kind kind;
  int i = 0;  // 1-based
  int j = 0;

  Wvec raw(int m, int n) const;
  bool operator==(const Root&) const = default;
};

std::string to_string(const Root& r);

// Atypical pairs (i_k, j_k) with a_{i_k} = b_{j_k}, ordered by increasing j.
// Matched values are strictly increasing in k, so i_k is strictly decreasing.
struct GammaSet {
  struct Pair {
    int i = 0;
    int j = 0;
    bool operator==(const Pair&) const = default;
  };
  std::vector<Pair> pairs;

  int size() const { return static_cast<int>(pairs.size()); }
};

GammaSet gamma_set(const RhoShiftedWeight& rs);
int atypicality(const RhoShiftedWeight& rs);
bool is_maximal(const RhoShiftedWeight& rs);

// Even positive roots orthogonal to every beta in Gamma: eps_i - eps_k over
// unmatched eps indices i < k, then delta_j - delta_l over unmatched delta
// indices j < l, each block in lexicographic order.
std::vector<Root> m_lambda_positive(const RhoShiftedWeight& rs, const GammaSet& g);

// Half sum of the given roots, as an exact rational raw vector.
std::vector<BigRat> rho0_lambda(const std::vector<Root>& mplus, int m, int n);

// Standard bilinear form: (eps_i,eps_j) = delta_ij, (delta_i,delta_j) = -delta_ij,
// mixed pairs 0.  Arguments are raw vectors of equal length with eps block size m.
BigRat bilinear(const Wvec& x, const Wvec& y, int m);
BigRat bilinear(const std::vector<BigRat>& x, const std::vector<BigRat>& y, int m);

// <x, alpha^vee> = 2(x,alpha)/(alpha,alpha) for an even root; both kinds reduce
// to a difference of raw coordinates.
BigRat inner_coroot(const Wvec& x, const Root& alpha, int m);
BigRat inner_coroot(const std::vector<BigRat>& x, const Root& alpha, int m);

}  // namespace superdim
