#pragma once

#include <complex>
#include <vector>

#include "hypo/symbol.hpp"

namespace hypo::oracle {

/// Brute-force Bergman inner product <z^a zbar^b |z|^s, z^c zbar^d |z|^t>.
/// The angular integral is analytic (zero unless a + d = b + c); the radial
/// integral is Gauss quadrature, doubled until two rules agree to 1e-13.
/// Independent of the closed forms in the projection module.
double quad_inner_product(int a, int b, double s, int c, int d, double t);

/// ||T_phi u||^2 - ||T_phibar u||^2 for u = sum u_k z^k, assembled purely from
/// quad_inner_product-based projections and norms. Slow by design; exists to
/// cross-validate the commutator module and never feeds a Verdict.
double gram_commutator_value(const symbol::RadialSymbol& phi,
                             const std::vector<std::complex<double>>& u);

}  // namespace hypo::oracle
