#pragma once

#include "superdim/weights.hpp"

#include <array>
#include <cstring>
#include <unordered_map>

namespace superdim {

// Grading used for truncation: phi(eps_i) = m+n+1-i, phi(delta_j) = n+1-j.
// On a raw vector this is the dot product with (m+n, m+n-1, .., 1).  Every
// positive root has phi > 0, so multiplying by a series supported in
// phi <= 0 with constant term 1 moves mass strictly downward and truncation
// below a fixed absolute floor is exact above the floor.
std::int64_t phi_degree(int m, int n, const Wvec& mu);

// Fixed-capacity key for the coefficient maps.  The engine is desk scale:
// m + n <= 12 and intermediate coordinates within int16.
struct PackedWeight {
  static constexpr int kCap = 12;
  std::array<std::int16_t, kCap> v{};

  bool operator==(const PackedWeight&) const = default;
};

struct PackedWeightHash {
  std::size_t operator()(const PackedWeight& w) const {
    std::uint64_t h = 0x9e3779b97f4a7c15ull;
    const auto* p = reinterpret_cast<const unsigned char*>(w.v.data());
    for (int off = 0; off < 3; ++off) {
      std::uint64_t word;
      std::memcpy(&word, p + 8 * off, 8);
      h ^= word;
      h *= 0xff51afd7ed558ccdull;
      h ^= h >> 33;
    }
    return static_cast<std::size_t>(h);
  }
};

// Exact truncated formal sum of e^mu terms: integer coefficients on raw
// weight vectors, all stored weights satisfying phi(mu) >= floor_phi.
// top_phi records the reference top of a finished assembly (phi of the
// highest weight), so cutoff() = top_phi - floor_phi.
class FormalCharacter {
 public:
  using Map = std::unordered_map<PackedWeight, BigInt, PackedWeightHash>;

  FormalCharacter(int m, int n, std::int64_t floor_phi);

  int m() const { return m_; }
  int n() const { return n_; }
  std::int64_t floor_phi() const { return floor_; }
  std::int64_t top_phi() const { return top_; }
  void set_top_phi(std::int64_t t) { top_ = t; }
  std::int64_t cutoff() const { return top_ - floor_; }

  std::int64_t phi(const PackedWeight& w) const;
  PackedWeight pack(const Wvec& mu) const;
  Wvec unpack(const PackedWeight& w) const;

  bool empty() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  BigInt coeff(const Wvec& mu) const;
  BigInt coefficient_sum() const;
  std::int64_t max_phi() const;  // floor_ - 1 when empty

  void add(const Wvec& mu, const BigInt& coeff);
  void add(const PackedWeight& w, const BigInt& coeff);
  void add_scaled(const FormalCharacter& other, const BigInt& scale);
  void prune_zeros();

  const Map& terms() const { return c_; }

  // (weight, coeff) pairs sorted by descending phi, then ascending lex.
  std::vector<std::pair<Wvec, BigInt>> sorted_items() const;

 private:
  int m_;
  int n_;
  std::int64_t floor_;
  std::int64_t top_;
  std::array<std::int32_t, PackedWeight::kCap> phiw_{};
  Map c_;
};

// list of {"weight": [...], "coeff": "decimal"} in sorted_items() order
std::string character_to_json(const FormalCharacter& f);

// lambda = base - sum c_k beta_k over the gamma pairs; throws NotInCoset if
// lambda is not in the integer span coset.
struct CosetCoordinates {
  std::vector<std::int64_t> c;
  BigInt abs_sum() const;
};

CosetCoordinates coset_coordinates(const Wvec& lambda, const RhoShiftedWeight& base,
                                   const GammaSet& gamma);

// Maximal element of lambda - Z-span(Gamma) whose raw delta coordinates at
// j_1..j_r are weakly increasing; computed with the running-max correction.
Wvec up_arrow(const Wvec& lambda, const RhoShiftedWeight& base, const GammaSet& gamma);

// sigma in Sym_r permutes the eps coordinates at i_1..i_r and the delta
// coordinates at j_1..j_r: the value in slot k moves to slot sigma(k).
Wvec sym_r_apply(const std::vector<int>& sigma, const Wvec& lambda, const GammaSet& gamma,
                 int m);

struct Composition {
  std::vector<int> parts;  // positive, summing to r
  int r() const;
};

// All 2^(r-1) compositions of r, lexicographic.
std::vector<Composition> cyclic_permutations(int r);

// r! / (i_1! .. i_t!)
BigInt multinomial(const Composition& pi);

// (-1)^(r + t): the sign of the permutation with consecutive cycles of the
// given lengths.
int pi_sign(const Composition& pi);

// 1-based image sequence of that permutation: blocks (1..i_1)(i_1+1..)...,
// each block a cycle sending p to p+1 and its last element to its first.
std::vector<int> pi_as_permutation(const Composition& pi);

// sum over compositions of multinomial * sign; equals 1 for every r >= 1
BigInt lemma2_sum(int r);

struct EngineContext {
  RhoShiftedWeight base;  // Lambda + rho
  GammaSet gamma;

  static EngineContext of(const SuperWeight& w);
};

// phi span of base reversed block-wise, plus slack; doubled on retry by
// callers when the shell check fails.
std::int64_t default_cutoff(const SuperWeight& w);

// Supercharacter building block: e^{-rho} times the super Weyl denominator
// inverse times the signed Weyl symmetrization of e^nu over the product of
// (1 - e^{-beta}) for beta in Gamma.  nu must lie in the Z-span coset of
// base.  Exact above phi(Lambda) - cutoff.
FormalCharacter chi(const Wvec& nu, const EngineContext& ctx, std::int64_t cutoff);

// Full character (all coefficients nonnegative) and supercharacter of the
// simple module with dominant highest weight w.  cutoff <= 0 selects
// default_cutoff(w).
FormalCharacter su_zhang_character(const SuperWeight& w, std::int64_t cutoff = 0);
FormalCharacter supercharacter(const SuperWeight& w, std::int64_t cutoff = 0);

// Sum of all retained coefficients, after checking that the lowest `margin`
// phi levels of the retained window carry no terms (otherwise the truncation
// may have cut actual support: ShellNotClean).
BigInt evaluate_at_zero(const FormalCharacter& f, int margin = 5);

}  // namespace superdim
