#pragma once

#include "superdim/diagram.hpp"
#include "superdim/weights.hpp"

namespace superdim {

struct SuperdimReport {
  int atypicality = 0;
  bool maximal = false;
  BigInt s_lambda;
  BigInt glambda_dim;
  BigInt sdim_abs;  // 0 when not maximally atypical
};

// Weyl dimension of the reductive subalgebra with positive system mplus, for
// the module whose rho-shifted highest weight is rs restricted to it: the
// product over mplus of <Lambda+rho, alpha^vee> / <rho0, alpha^vee> with rho0
// the half sum of mplus.  Exact; the result is a positive integer.
BigInt glambda_dim(const RhoShiftedWeight& rs, const std::vector<Root>& mplus);

// |sdim L(Lambda)| = s_lambda * glambda_dim at maximal atypicality, else 0.
SuperdimReport superdimension(const SuperWeight& w);

}  // namespace superdim
