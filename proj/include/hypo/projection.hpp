#pragma once

#include <stdexcept>
#include <vector>

#include "hypo/complex.hpp"
#include "hypo/rational.hpp"
#include "hypo/symbol.hpp"

namespace hypo::projection {

/// coeff * z^degree; coeff == 0 encodes the zero projection.
template <class T>
struct ScaledMonomial {
    Cplx<T> coeff;
    int degree = 0;
};

/// <z^a zbar^b |z|^s, z^c zbar^d |z|^t> with normalized area measure:
/// 2 / (2(a+d)+s+t+2) when a+d == b+c, else 0.
template <class T>
T monomial_inner_product(int a, int b, const T& s, int c, int d, const T& t) {
    if (a < 0 || b < 0 || c < 0 || d < 0)
        throw std::invalid_argument("monomial_inner_product: negative exponent");
    if (a + d != b + c) return T(0);
    T denom = scalar_traits<T>::from_long(2 * (a + d) + 2) + s + t;
    return scalar_traits<T>::from_long(2) / denom;
}

/// Bergman projection of z^k zbar^j |z|^t: zero when j > k, otherwise
/// 2(k-j+1)/(2k+t+2) z^(k-j). With t = 0 this is (k-j+1)/(k+1) z^(k-j).
template <class T>
ScaledMonomial<T> project_monomial(int k, int j, const T& t) {
    if (k < 0 || j < 0) throw std::invalid_argument("project_monomial: negative exponent");
    if (j > k) return {Cplx<T>(T(0)), 0};
    T coeff = scalar_traits<T>::from_long(2 * (k - j + 1)) /
              (scalar_traits<T>::from_long(2 * k + 2) + t);
    return {Cplx<T>(coeff), k - j};
}

/// T_phi z^k as a finite monomial sum, one entry per surviving symbol term.
/// Requires phi normalized. Entries with distinct degrees; zero terms dropped.
std::vector<ScaledMonomial<Rat>> toeplitz_apply(const symbol::RadialSymbol& phi, int k);

}  // namespace hypo::projection
