#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "hypo/complex.hpp"
#include "hypo/rational.hpp"

namespace hypo::symbol {

/// One term a * z^holo * zbar^anti * |z|^radial of a symbol.
/// Stored exactly as written; equality of the underlying function is decided
/// through the normalized key, which absorbs z*zbar pairs into the |z| power.
struct Monomial {
    CRat coeff;
    int holo = 0;    // power of z
    int anti = 0;    // power of zbar
    Rat radial = 0;  // power of |z|

    Monomial() = default;
    Monomial(CRat c, int h, int a, Rat r);

    /// (holo - min, anti - min, radial + 2*min): unique key of the function.
    std::tuple<int, int, Rat> normalized_key() const;
};

/// Finite complex-linear combination of radial monomials.
struct RadialSymbol {
    std::vector<Monomial> terms;

    bool empty() const { return terms.empty(); }
};

/// Merges terms with equal normalized key, drops zero coefficients, and
/// orders terms deterministically. Idempotent.
RadialSymbol normalize(const RadialSymbol& phi);

/// Term-wise conjugation: a z^m zbar^n |z|^s -> conj(a) z^n zbar^m |z|^s.
RadialSymbol conjugate(const RadialSymbol& phi);

bool is_normalized(const RadialSymbol& phi);

/// All terms are plain powers of z (after normalization).
bool is_analytic(const RadialSymbol& phi);

/// conjugate(phi) represents the same function as phi.
bool is_self_adjoint(const RadialSymbol& phi);

std::string to_string(const RadialSymbol& phi);
std::string to_string(const Monomial& m);

}  // namespace hypo::symbol
