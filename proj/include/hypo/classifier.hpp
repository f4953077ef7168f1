#pragma once

#include <complex>
#include <vector>

#include "hypo/commutator.hpp"
#include "hypo/complex.hpp"
#include "hypo/rational.hpp"
#include "hypo/symbol.hpp"
#include "hypo/verdict.hpp"

namespace hypo::classifier {

/// Dense real polynomial, ascending coefficients, trailing zeros trimmed.
template <class T>
struct RealPolynomial {
    std::vector<T> coeffs;

    int degree() const { return static_cast<int>(coeffs.size()) - 1; }
    bool is_zero() const { return coeffs.empty(); }

    T eval(const T& x) const {
        T acc(0);
        for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
        return acc;
    }
};

/// Verdict for T_{z^n + C|z|^s}: |C| > n/s refutes; |C| <= n/s proves when
/// s >= 2n; otherwise open (refinable through the extremal module).
Verdict classify_zn_radial(int n, const Rat& s, const CRat& C);
/// Floating variant for irrational s; comparisons within a relative margin
/// of 1e-12 return Inconclusive rather than an unsound exact claim.
Verdict classify_zn_radial(int n, double s, std::complex<double> C);

/// Some s making T_{z^n + C|z|^s} not hyponormal (C != 0): the canonical
/// choice max(2n, 2n*ceil(1/|C|)), computed exactly, so s >= 2n and
/// n/s < |C| both hold and the refutation is in the exact regime.
Rat exists_breaking_s(int n, const CRat& C);

/// T_{z^n|z|^s} is hyponormal for every n >= 1, s > 0.
Verdict classify_pure_radial_power(int n, const Rat& s);

/// T_{|z|^s(z^n + a zbar^n)} is hyponormal iff |a| <= 1; refutations carry a
/// one-coordinate exact witness.
Verdict classify_conjugate_pair(int n, const Rat& s, const CRat& a);

/// The cleared-denominator polynomial P(alpha) whose nonnegativity on the
/// integers >= m is equivalent to hyponormality of
/// T_{z^m(|z|^{s_0} + a_1|z|^{s_1} + ... + a_n|z|^{s_n})}.
/// exponents = s_0..s_n (all > 0); coeffs = a_1..a_n (a_0 = 1 implied).
/// Denominators are cleared against (alpha+m+1+s_j/2) and (alpha+1+s_j/2).
template <class T>
RealPolynomial<T> alph_polynomial(int m, const std::vector<T>& exponents,
                                  const std::vector<Cplx<T>>& coeffs);

struct RayCheck {
    enum class Status { Nonnegative, Violated, Borderline };
    Status status;
    long violated_at = -1;  // least violating integer when Violated

    bool nonnegative() const { return status == Status::Nonnegative; }
};

/// Decides p(alpha) >= 0 for all integers alpha >= m by leading-sign analysis
/// plus exhaustive evaluation up to the Cauchy root bound. Exact on the
/// rational path; the float instantiation reports Borderline when a value is
/// within margin of zero.
RayCheck check_positivity_on_ray(const RealPolynomial<Rat>& p, int m);
RayCheck check_positivity_on_ray(const RealPolynomial<double>& p, int m, double margin = 1e-9);

/// Full verdict for z^m(|z|^{s_0} + a_1|z|^{s_1} + ... ): n = 1 closed-form
/// fast paths, then the exact polynomial ray test.
Verdict classify_algebraic(int m, const std::vector<Rat>& exponents,
                           const std::vector<CRat>& coeffs);
Verdict classify_algebraic(int m, const std::vector<double>& exponents,
                           const std::vector<std::complex<double>>& coeffs);

/// Strict positivity of delta'_k: exact scan to K plus asymptote sign.
commutator::DeltaPrimeCheck check_delta_prime_positive(int m, int n, const Rat& s, const Rat& t,
                                                       long K = 100000);

struct ClassifyOptions {
    int max_truncation = 4096;    // cap of the eigen-certificate schedule
    int region_budget = 200;      // trial-family scale for excluded_region
    double tol = 1e-12;
};

/// Pattern-matching dispatcher over the theorem families, falling through to
/// the excluded-region search and the eigenvalue certificate. Verdict
/// precedence: exact iff-theorems, one-sided theorems, numerical
/// certificates, Inconclusive.
Verdict classify(const symbol::RadialSymbol& phi, const ClassifyOptions& opts = {});

}  // namespace hypo::classifier
