#include "superdim/charformula.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "superdim/diagram.hpp"

namespace superdim {

std::int64_t phi_degree(int m, int n, const Wvec& mu) {
  if (static_cast<int>(mu.size()) != m + n)
    throw DimensionMismatchError("phi_degree on vector of wrong length");
  std::int64_t s = 0;
  for (int k = 0; k < m + n; ++k) s += mu[k] * (m + n - k);
  return s;
}

FormalCharacter::FormalCharacter(int m, int n, std::int64_t floor_phi)
    : m_(m), n_(n), floor_(floor_phi), top_(floor_phi) {
  if (m_ < 0 || n_ < 0 || m_ + n_ < 1)
    throw UnsupportedShapeError("character needs m + n >= 1");
  if (m_ + n_ > PackedWeight::kCap)
    throw BoundExceededError("character engine supports m + n <= " +
                             std::to_string(PackedWeight::kCap));
  for (int k = 0; k < m_ + n_; ++k) phiw_[k] = m_ + n_ - k;
}

std::int64_t FormalCharacter::phi(const PackedWeight& w) const {
  std::int64_t s = 0;
  for (int k = 0; k < m_ + n_; ++k) s += static_cast<std::int64_t>(w.v[k]) * phiw_[k];
  return s;
}

PackedWeight FormalCharacter::pack(const Wvec& mu) const {
  if (static_cast<int>(mu.size()) != m_ + n_)
    throw DimensionMismatchError("weight vector of wrong length");
  PackedWeight w;
  for (int k = 0; k < m_ + n_; ++k) {
    if (mu[k] < INT16_MIN || mu[k] > INT16_MAX)
      throw BoundExceededError("weight coordinate too large for the engine");
    w.v[k] = static_cast<std::int16_t>(mu[k]);
  }
  return w;
}

Wvec FormalCharacter::unpack(const PackedWeight& w) const {
  Wvec mu(m_ + n_);
  for (int k = 0; k < m_ + n_; ++k) mu[k] = w.v[k];
  return mu;
}

BigInt FormalCharacter::coeff(const Wvec& mu) const {
  auto it = c_.find(pack(mu));
  return it == c_.end() ? BigInt(0) : it->second;
}

BigInt FormalCharacter::coefficient_sum() const {
  BigInt s = 0;
  for (const auto& [w, c] : c_) s += c;
  return s;
}

std::int64_t FormalCharacter::max_phi() const {
  std::int64_t best = floor_ - 1;
  for (const auto& [w, c] : c_)
    if (c != 0) best = std::max(best, phi(w));
  return best;
}

void FormalCharacter::add(const PackedWeight& w, const BigInt& coeff) {
  if (coeff == 0 || phi(w) < floor_) return;
  auto [it, fresh] = c_.try_emplace(w);
  it->second += coeff;
  if (it->second == 0) c_.erase(it);
}

void FormalCharacter::add(const Wvec& mu, const BigInt& coeff) { add(pack(mu), coeff); }

void FormalCharacter::add_scaled(const FormalCharacter& other, const BigInt& scale) {
  if (other.floor_ != floor_) throw InternalError("adding characters with different floors");
  if (scale == 0) return;
  for (const auto& [w, c] : other.c_) add(w, c * scale);
}

void FormalCharacter::prune_zeros() {
  for (auto it = c_.begin(); it != c_.end();)
    it = (it->second == 0) ? c_.erase(it) : std::next(it);
}

std::vector<std::pair<Wvec, BigInt>> FormalCharacter::sorted_items() const {
  std::vector<std::pair<Wvec, BigInt>> out;
  out.reserve(c_.size());
  for (const auto& [w, c] : c_)
    if (c != 0) out.emplace_back(unpack(w), c);
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) {
    auto px = phi_degree(m_, n_, x.first), py = phi_degree(m_, n_, y.first);
    if (px != py) return px > py;
    return x.first < y.first;
  });
  return out;
}

std::string character_to_json(const FormalCharacter& f) {
  std::ostringstream os;
  os << "[";
  bool first = true;
  for (const auto& [mu, c] : f.sorted_items()) {
    os << (first ? "" : ",") << "\n  {\"weight\": [";
    for (std::size_t k = 0; k < mu.size(); ++k) os << (k ? "," : "") << mu[k];
    os << "], \"coeff\": \"" << c.str() << "\"}";
    first = false;
  }
  os << "\n]\n";
  return os.str();
}

BigInt CosetCoordinates::abs_sum() const {
  BigInt s = 0;
  for (auto x : c) s += (x < 0) ? -x : x;
  return s;
}

CosetCoordinates coset_coordinates(const Wvec& lambda, const RhoShiftedWeight& base,
                                   const GammaSet& gamma) {
  Wvec braw = base.raw();
  if (lambda.size() != braw.size())
    throw DimensionMismatchError("weight vector of wrong length for the base shape");
  Wvec diff(braw.size());
  for (std::size_t k = 0; k < braw.size(); ++k) diff[k] = braw[k] - lambda[k];

  CosetCoordinates cc;
  cc.c.assign(gamma.size(), 0);
  std::vector<bool> covered(braw.size(), false);
  for (int k = 0; k < gamma.size(); ++k) {
    int ie = gamma.pairs[k].i - 1, id = base.m + gamma.pairs[k].j - 1;
    cc.c[k] = diff[ie];
    if (diff[id] != -cc.c[k])
      throw NotInCosetError("eps and delta displacements disagree at gamma slot " +
                            std::to_string(k + 1));
    covered[ie] = covered[id] = true;
  }
  for (std::size_t k = 0; k < diff.size(); ++k)
    if (!covered[k] && diff[k] != 0)
      throw NotInCosetError("nonzero displacement off the gamma support at coordinate " +
                            std::to_string(k + 1));
  return cc;
}

Wvec up_arrow(const Wvec& lambda, const RhoShiftedWeight& base, const GammaSet& gamma) {
  coset_coordinates(lambda, base, gamma);  // membership check
  Wvec out = lambda;
  std::int64_t run = 0;
  for (int k = gamma.size() - 1; k >= 0; --k) {
    int ie = gamma.pairs[k].i - 1, id = base.m + gamma.pairs[k].j - 1;
    std::int64_t dk = lambda[id];
    run = (k == gamma.size() - 1) ? dk : std::min(run, dk);
    std::int64_t e = dk - run;
    out[ie] += e;
    out[id] -= e;
  }
  return out;
}

Wvec sym_r_apply(const std::vector<int>& sigma, const Wvec& lambda, const GammaSet& gamma,
                 int m) {
  int r = gamma.size();
  if (static_cast<int>(sigma.size()) != r)
    throw DimensionMismatchError("permutation length disagrees with the gamma set");
  std::vector<bool> seen(r + 1, false);
  for (int s : sigma) {
    if (s < 1 || s > r || seen[s])
      throw IndexOutOfRangeError("not a permutation of 1.." + std::to_string(r));
    seen[s] = true;
  }
  Wvec out = lambda;
  for (int k = 0; k < r; ++k) {
    int from_e = gamma.pairs[k].i - 1, to_e = gamma.pairs[sigma[k] - 1].i - 1;
    int from_d = m + gamma.pairs[k].j - 1, to_d = m + gamma.pairs[sigma[k] - 1].j - 1;
    out[to_e] = lambda[from_e];
    out[to_d] = lambda[from_d];
  }
  return out;
}

int Composition::r() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::vector<Composition> cyclic_permutations(int r) {
  if (r < 0) throw IndexOutOfRangeError("composition order must be nonnegative");
  std::vector<Composition> out;
  Composition cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.push_back(cur);
      return;
    }
    for (int first = 1; first <= rest; ++first) {
      cur.parts.push_back(first);
      self(self, rest - first);
      cur.parts.pop_back();
    }
  };
  rec(rec, r);
  return out;
}

BigInt multinomial(const Composition& pi) {
  BigInt v = factorial(pi.r());
  for (int p : pi.parts) {
    BigInt q = factorial(p);
    if (v % q != 0) throw InternalError("multinomial is not an integer");
    v /= q;
  }
  return v;
}

int pi_sign(const Composition& pi) {
  int t = static_cast<int>(pi.parts.size());
  return ((pi.r() + t) % 2 == 0) ? 1 : -1;
}

std::vector<int> pi_as_permutation(const Composition& pi) {
  std::vector<int> sigma(pi.r());
  int s = 1;
  for (int p : pi.parts) {
    for (int q = s; q < s + p - 1; ++q) sigma[q - 1] = q + 1;
    sigma[s + p - 2] = s;
    s += p;
  }
  return sigma;
}

BigInt lemma2_sum(int r) {
  if (r < 1) throw IndexOutOfRangeError("lemma2_sum needs r >= 1");
  BigInt s = 0;
  for (const auto& pi : cyclic_permutations(r)) s += multinomial(pi) * pi_sign(pi);
  return s;
}

EngineContext EngineContext::of(const SuperWeight& w) {
  auto rs = rho_shift(w);
  auto g = gamma_set(rs);
  return EngineContext{std::move(rs), std::move(g)};
}

std::int64_t default_cutoff(const SuperWeight& w) {
  auto rs = rho_shift(w);
  Wvec top = rs.raw();
  Wvec rev = top;
  std::reverse(rev.begin(), rev.begin() + rs.m);
  std::reverse(rev.begin() + rs.m, rev.end());
  return phi_degree(rs.m, rs.n, top) - phi_degree(rs.m, rs.n, rev) + 10;
}

namespace {

struct WeylElem {
  std::vector<int> eperm;  // 0-based images
  std::vector<int> dperm;
  int sign = 1;
};

int perm_sign(const std::vector<int>& p) {
  int inv = 0;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = i + 1; j < p.size(); ++j)
      if (p[i] > p[j]) ++inv;
  return (inv % 2 == 0) ? 1 : -1;
}

std::vector<WeylElem> weyl_group(int m, int n) {
  std::vector<std::vector<int>> eperms, dperms;
  std::vector<int> p(m);
  std::iota(p.begin(), p.end(), 0);
  do { eperms.push_back(p); } while (std::next_permutation(p.begin(), p.end()));
  p.assign(n, 0);
  std::iota(p.begin(), p.end(), 0);
  do { dperms.push_back(p); } while (std::next_permutation(p.begin(), p.end()));

  std::vector<WeylElem> out;
  out.reserve(eperms.size() * dperms.size());
  for (const auto& e : eperms) {
    int se = perm_sign(e);
    for (const auto& d : dperms) out.push_back({e, d, se * perm_sign(d)});
  }
  return out;
}

Wvec apply_weyl(const WeylElem& w, const Wvec& v, int m, int n) {
  Wvec out(m + n);
  for (int i = 0; i < m; ++i) out[w.eperm[i]] = v[i];
  for (int j = 0; j < n; ++j) out[m + w.dperm[j]] = v[m + j];
  return out;
}

struct FactorTerm {
  PackedWeight w;
  std::int64_t phi;
  int coeff;
};

// geometric series in e^{-alpha}: sum_k step^k e^{-k alpha}, down to -depth
std::vector<FactorTerm> geom_factor(const FormalCharacter& ref, const Wvec& alpha, int step,
                                    std::int64_t depth) {
  std::int64_t pa = phi_degree(ref.m(), ref.n(), alpha);
  if (pa <= 0) throw InternalError("expansion root must have positive phi");
  std::vector<FactorTerm> out;
  Wvec cur(alpha.size(), 0);
  int coeff = 1;
  for (std::int64_t k = 0; k * pa <= depth; ++k) {
    out.push_back({ref.pack(cur), -k * pa, coeff});
    for (std::size_t t = 0; t < cur.size(); ++t) cur[t] -= alpha[t];
    coeff *= step;
  }
  return out;
}

// two-term factor 1 + sign * e^{-alpha}
std::vector<FactorTerm> linear_factor(const FormalCharacter& ref, const Wvec& alpha, int sign) {
  std::int64_t pa = phi_degree(ref.m(), ref.n(), alpha);
  if (pa <= 0) throw InternalError("expansion root must have positive phi");
  Wvec zero(alpha.size(), 0), neg(alpha.size());
  for (std::size_t t = 0; t < alpha.size(); ++t) neg[t] = -alpha[t];
  return {{ref.pack(zero), 0, 1}, {ref.pack(neg), -pa, sign}};
}

FormalCharacter times_factor(const FormalCharacter& f, const std::vector<FactorTerm>& fac) {
  FormalCharacter out(f.m(), f.n(), f.floor_phi());
  int len = f.m() + f.n();
  for (const auto& [wa, ca] : f.terms()) {
    if (ca == 0) continue;
    std::int64_t pa = f.phi(wa);
    for (const auto& t : fac) {
      if (pa + t.phi < f.floor_phi()) break;  // factor is sorted by descending phi
      PackedWeight key = wa;
      for (int k = 0; k < len; ++k) key.v[k] = static_cast<std::int16_t>(key.v[k] + t.w.v[k]);
      out.add(key, (t.coeff == 1) ? ca : ca * t.coeff);
    }
  }
  return out;
}

std::vector<Wvec> positive_even_roots(int m, int n) {
  std::vector<Wvec> out;
  for (int i = 1; i <= m; ++i)
    for (int k = i + 1; k <= m; ++k) out.push_back(Root{Root::Kind::EvenEps, i, k}.raw(m, n));
  for (int j = 1; j <= n; ++j)
    for (int l = j + 1; l <= n; ++l) out.push_back(Root{Root::Kind::EvenDelta, j, l}.raw(m, n));
  return out;
}

std::vector<Wvec> positive_odd_roots(int m, int n) {
  std::vector<Wvec> out;
  for (int i = 1; i <= m; ++i)
    for (int j = 1; j <= n; ++j) out.push_back(Root{Root::Kind::Odd, i, j}.raw(m, n));
  return out;
}

// sum over the Weyl group of sign(w) e^{w nu - rho} / prod_beta (1 - inner_step e^{-w beta}),
// scaled and added into acc.  inner_step +1 gives plain geometric series, -1 alternating.
void accumulate_weyl_sum(FormalCharacter& acc, const Wvec& nu, const EngineContext& ctx,
                         const std::vector<WeylElem>& weyl, int inner_step,
                         const BigInt& scale) {
  int m = ctx.base.m, n = ctx.base.n;
  Wvec rho = rho_shift(SuperWeight(m, n, Wvec(m, 0), Wvec(n, 0))).raw();
  for (const auto& w : weyl) {
    Wvec mono = apply_weyl(w, nu, m, n);
    for (int k = 0; k < m + n; ++k) mono[k] -= rho[k];
    std::int64_t pm = phi_degree(m, n, mono);
    if (pm < acc.floor_phi()) continue;
    FormalCharacter term(m, n, acc.floor_phi());
    term.add(mono, 1);
    for (const auto& p : ctx.gamma.pairs) {
      Wvec beta(m + n, 0);
      beta[w.eperm[p.i - 1]] = 1;
      beta[m + w.dperm[p.j - 1]] = -1;
      term = times_factor(term, geom_factor(term, beta, inner_step, pm - acc.floor_phi()));
    }
    acc.add_scaled(term, scale * w.sign);
  }
}

// multiply by the Weyl denominator inverse: linear odd factors (1 + odd_sign e^{-alpha})
// and geometric series for the even positive roots
void multiply_denominator(FormalCharacter& acc, int odd_sign) {
  int m = acc.m(), n = acc.n();
  for (const auto& alpha : positive_odd_roots(m, n)) {
    if (acc.max_phi() < acc.floor_phi()) return;
    acc = times_factor(acc, linear_factor(acc, alpha, odd_sign));
  }
  for (const auto& alpha : positive_even_roots(m, n)) {
    std::int64_t depth = acc.max_phi() - acc.floor_phi();
    if (depth < 0) return;
    acc = times_factor(acc, geom_factor(acc, alpha, 1, depth));
  }
}

FormalCharacter assemble(const SuperWeight& w, std::int64_t cutoff, bool super) {
  auto ctx = EngineContext::of(w);
  int m = ctx.base.m, n = ctx.base.n;
  int r = ctx.gamma.size();
  if (cutoff <= 0) cutoff = default_cutoff(w);

  std::int64_t top = phi_degree(m, n, w.raw());
  FormalCharacter acc(m, n, top - cutoff);

  auto diag = build_diagram(ctx.base);
  auto sigmas = enumerate_S_Lambda(diag);
  auto comps = cyclic_permutations(r);
  Wvec base_raw = ctx.base.raw();

  // Group equal chi arguments first; coefficients are scaled by r! so they
  // stay integers: (1/r!)(r choose pi) r! = multinomial(pi).
  std::map<Wvec, BigInt> grouped;
  for (const auto& sigma : sigmas) {
    Wvec s2 = up_arrow(sym_r_apply(sigma, base_raw, ctx.gamma, m), ctx.base, ctx.gamma);
    for (const auto& pi : comps) {
      Wvec nu = up_arrow(sym_r_apply(pi_as_permutation(pi), s2, ctx.gamma, m), ctx.base,
                         ctx.gamma);
      BigInt coef = multinomial(pi) * pi_sign(pi);
      if (!super && coset_coordinates(nu, ctx.base, ctx.gamma).abs_sum() % 2 != 0)
        coef = -coef;
      grouped[nu] += coef;
    }
  }

  auto weyl = weyl_group(m, n);
  int inner_step = super ? 1 : -1;
  for (const auto& [nu, coef] : grouped)
    if (coef != 0) accumulate_weyl_sum(acc, nu, ctx, weyl, inner_step, coef);

  multiply_denominator(acc, super ? -1 : 1);

  BigInt scale = factorial(r);
  FormalCharacter out(m, n, top - cutoff);
  out.set_top_phi(top);
  for (const auto& [key, c] : acc.terms()) {
    if (c == 0) continue;
    if (c % scale != 0) throw InternalError("character coefficient not divisible by r!");
    BigInt v = c / scale;
    if (!super && v < 0) throw InternalError("character has a negative coefficient");
    out.add(key, v);
  }
  return out;
}

}  // namespace

FormalCharacter chi(const Wvec& nu, const EngineContext& ctx, std::int64_t cutoff) {
  int m = ctx.base.m, n = ctx.base.n;
  coset_coordinates(nu, ctx.base, ctx.gamma);  // membership check
  if (cutoff <= 0) cutoff = default_cutoff(unshift(ctx.base));
  std::int64_t top = phi_degree(m, n, ctx.base.raw()) -
                     phi_degree(m, n, rho_shift(SuperWeight(m, n, Wvec(m, 0), Wvec(n, 0))).raw());
  FormalCharacter acc(m, n, top - cutoff);
  acc.set_top_phi(top);
  auto weyl = weyl_group(m, n);
  accumulate_weyl_sum(acc, nu, ctx, weyl, 1, 1);
  multiply_denominator(acc, -1);
  acc.set_top_phi(top);
  return acc;
}

FormalCharacter su_zhang_character(const SuperWeight& w, std::int64_t cutoff) {
  return assemble(w, cutoff, false);
}

FormalCharacter supercharacter(const SuperWeight& w, std::int64_t cutoff) {
  return assemble(w, cutoff, true);
}

BigInt evaluate_at_zero(const FormalCharacter& f, int margin) {
  std::int64_t lim = f.floor_phi() + margin;
  for (const auto& [w, c] : f.terms())
    if (c != 0 && f.phi(w) < lim)
      throw ShellNotCleanError(
          "nonzero coefficient at phi = " + std::to_string(f.phi(w)) +
          " inside the shell [" + std::to_string(f.floor_phi()) + ", " + std::to_string(lim) +
          "); the cutoff is too small to trust the evaluation");
  return f.coefficient_sum();
}

}  // namespace superdim
