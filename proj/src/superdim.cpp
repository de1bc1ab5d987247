#include "superdim/superdim.hpp"

namespace superdim {

BigInt glambda_dim(const RhoShiftedWeight& rs, const std::vector<Root>& mplus) {
  auto rho0 = rho0_lambda(mplus, rs.m, rs.n);
  Wvec top = rs.raw();
  BigRat prod = 1;
  for (const auto& alpha : mplus) {
    BigRat num = inner_coroot(top, alpha, rs.m);
    BigRat den = inner_coroot(rho0, alpha, rs.m);
    if (den == 0) throw InternalError("zero denominator in dimension product");
    prod *= num / den;
  }
  if (boost::multiprecision::denominator(prod) != 1)
    throw InternalError("dimension product is not an integer");
  BigInt dim = boost::multiprecision::numerator(prod);
  if (dim <= 0) throw InternalError("dimension product is not positive");
  return dim;
}

SuperdimReport superdimension(const SuperWeight& w) {
  auto rs = rho_shift(w);
  auto g = gamma_set(rs);
  auto d = build_diagram(rs);

  SuperdimReport rep;
  rep.atypicality = g.size();
  rep.maximal = (g.size() == rs.n);
  rep.s_lambda = s_lambda(d);
  rep.glambda_dim = glambda_dim(rs, m_lambda_positive(rs, g));
  rep.sdim_abs = rep.maximal ? BigInt(rep.s_lambda * rep.glambda_dim) : BigInt(0);
  return rep;
}

}  // namespace superdim
