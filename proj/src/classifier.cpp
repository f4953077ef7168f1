#include "hypo/classifier.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "hypo/extremal.hpp"

namespace hypo::classifier {

namespace {

// --- small dense polynomial kernel over Cplx<T> ---------------------------

template <class T>
using CPoly = std::vector<Cplx<T>>;

template <class T>
CPoly<T> poly_mul(const CPoly<T>& a, const CPoly<T>& b) {
    if (a.empty() || b.empty()) return {};
    CPoly<T> out(a.size() + b.size() - 1, Cplx<T>(T(0)));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    return out;
}

template <class T>
void poly_add_in(CPoly<T>& a, const CPoly<T>& b) {
    if (a.size() < b.size()) a.resize(b.size(), Cplx<T>(T(0)));
    for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
}

template <class T>
CPoly<T> poly_conj(const CPoly<T>& a) {
    CPoly<T> out;
    out.reserve(a.size());
    for (const auto& c : a) out.push_back(c.conj());
    return out;
}

void trim_poly(std::vector<Rat>& c) {
    while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

void trim_poly(std::vector<double>& c) {
    double mx = 0;
    for (double v : c) mx = std::max(mx, std::abs(v));
    while (!c.empty() && std::abs(c.back()) <= 1e-12 * mx) c.pop_back();
}

}  // namespace

template <class T>
RealPolynomial<T> alph_polynomial(int m, const std::vector<T>& exponents,
                                  const std::vector<Cplx<T>>& coeffs) {
    if (m < 1) throw std::invalid_argument("alph_polynomial: m must be positive");
    size_t terms = exponents.size();
    if (terms == 0 || coeffs.size() + 1 != terms)
        throw std::invalid_argument("alph_polynomial: need exponents s_0..s_n and coeffs a_1..a_n");
    for (const auto& s : exponents)
        if (to_double(s) <= 0) throw std::invalid_argument("alph_polynomial: exponents must be positive");

    T half = scalar_traits<T>::ratio(1, 2);
    std::vector<Cplx<T>> a;
    a.emplace_back(T(1));
    for (const auto& c : coeffs) a.push_back(c);

    // d_j = alpha + m+1+s_j/2 ; e_j = alpha + 1+s_j/2
    auto lin = [&](const T& c0) { return CPoly<T>{Cplx<T>(c0), Cplx<T>(T(1))}; };
    std::vector<T> d0(terms), e0(terms);
    for (size_t j = 0; j < terms; ++j) {
        d0[j] = scalar_traits<T>::from_long(m + 1) + half * exponents[j];
        e0[j] = scalar_traits<T>::from_long(1) + half * exponents[j];
    }

    CPoly<T> A, B;
    for (size_t j = 0; j < terms; ++j) {
        CPoly<T> pd{a[j]}, pe{a[j]};
        for (size_t p = 0; p < terms; ++p) {
            if (p == j) continue;
            pd = poly_mul(pd, lin(d0[p]));
            pe = poly_mul(pe, lin(e0[p]));
        }
        poly_add_in(A, pd);
        poly_add_in(B, pe);
    }
    CPoly<T> prod_d{Cplx<T>(T(1))}, prod_e{Cplx<T>(T(1))};
    for (size_t j = 0; j < terms; ++j) {
        prod_d = poly_mul(prod_d, lin(d0[j]));
        prod_e = poly_mul(prod_e, lin(e0[j]));
    }

    CPoly<T> first = poly_mul(poly_mul(lin(scalar_traits<T>::from_long(m + 1)),
                                       poly_mul(A, poly_conj(A))),
                              poly_mul(prod_e, prod_e));
    CPoly<T> second = poly_mul(poly_mul(lin(scalar_traits<T>::from_long(1 - m)),
                                        poly_mul(B, poly_conj(B))),
                               poly_mul(prod_d, prod_d));

    RealPolynomial<T> out;
    size_t len = std::max(first.size(), second.size());
    out.coeffs.assign(len, T(0));
    for (size_t i = 0; i < len; ++i) {
        Cplx<T> v = (i < first.size() ? first[i] : Cplx<T>(T(0))) -
                    (i < second.size() ? second[i] : Cplx<T>(T(0)));
        out.coeffs[i] = v.re;  // imaginary parts cancel by conjugate symmetry
    }
    trim_poly(out.coeffs);
    return out;
}

template RealPolynomial<Rat> alph_polynomial<Rat>(int, const std::vector<Rat>&,
                                                  const std::vector<CRat>&);
template RealPolynomial<double> alph_polynomial<double>(int, const std::vector<double>&,
                                                        const std::vector<Cplx<double>>&);

RayCheck check_positivity_on_ray(const RealPolynomial<Rat>& p, int m) {
    if (p.is_zero()) throw std::invalid_argument("check_positivity_on_ray: zero polynomial");
    const Rat& lead = p.coeffs.back();
    // Cauchy bound: no real root beyond R
    Rat maxratio = 0;
    for (size_t i = 0; i + 1 < p.coeffs.size(); ++i)
        maxratio = std::max(maxratio, Rat(abs(p.coeffs[i] / lead)));
    long hi = static_cast<long>(std::ceil(to_double(maxratio))) + 1;
    long limit = std::max<long>(hi, m) + 1;
    for (long alpha = m; alpha <= limit; ++alpha) {
        if (sgn(p.eval(Rat(alpha))) < 0) return {RayCheck::Status::Violated, alpha};
    }
    if (sgn(lead) < 0) {
        // beyond the root bound the sign is the leading sign; keep scanning
        // until the guaranteed violation appears
        for (long alpha = limit + 1;; ++alpha)
            if (sgn(p.eval(Rat(alpha))) < 0) return {RayCheck::Status::Violated, alpha};
    }
    return {RayCheck::Status::Nonnegative, -1};
}

RayCheck check_positivity_on_ray(const RealPolynomial<double>& p, int m, double margin) {
    if (p.is_zero()) throw std::invalid_argument("check_positivity_on_ray: zero polynomial");
    double lead = p.coeffs.back();
    double maxratio = 0, maxabs = 0;
    for (double c : p.coeffs) maxabs = std::max(maxabs, std::abs(c));
    for (size_t i = 0; i + 1 < p.coeffs.size(); ++i)
        maxratio = std::max(maxratio, std::abs(p.coeffs[i] / lead));
    long limit = std::max<long>(static_cast<long>(std::ceil(maxratio)) + 1, m) + 1;
    bool borderline = false;
    for (long alpha = m; alpha <= limit; ++alpha) {
        double v = p.eval(double(alpha));
        double scale = margin * maxabs * std::pow(std::max<double>(alpha, 1), p.degree());
        if (v < -scale) return {RayCheck::Status::Violated, alpha};
        if (v < scale) borderline = true;
    }
    if (lead < 0) return {RayCheck::Status::Violated, limit + 1};
    if (borderline) return {RayCheck::Status::Borderline, -1};
    return {RayCheck::Status::Nonnegative, -1};
}

Verdict classify_zn_radial(int n, const Rat& s, const CRat& C) {
    if (n < 1) throw std::invalid_argument("classify_zn_radial: n must be positive");
    if (sgn(s) <= 0) throw std::invalid_argument("classify_zn_radial: s must be positive");
    if (C.is_zero()) return Verdict::hyponormal("analytic-symbol", "C = 0");
    Rat q = C.abs2();
    Rat thr2 = Rat(n * n) / (s * s);
    std::ostringstream det;
    det << "n=" << n << " s=" << s << " |C|^2=" << q << " (n/s)^2=" << thr2;
    if (q > thr2) return Verdict::not_hyponormal("radial-perturbation-threshold", det.str());
    if (s >= 2 * n) return Verdict::hyponormal("radial-perturbation-threshold", det.str());
    return Verdict::inconclusive("radial-perturbation-threshold",
                                 det.str() + "; |C| <= n/s but s < 2n: refine via the extremal quotient");
}

Verdict classify_zn_radial(int n, double s, std::complex<double> C) {
    if (n < 1) throw std::invalid_argument("classify_zn_radial: n must be positive");
    if (!(s > 0)) throw std::invalid_argument("classify_zn_radial: s must be positive");
    if (C == std::complex<double>(0)) return Verdict::hyponormal("analytic-symbol", "C = 0");
    double r = std::abs(C), thr = double(n) / s;
    std::ostringstream det;
    det << "n=" << n << " s=" << s << " |C|=" << r << " n/s=" << thr;
    if (std::abs(r - thr) <= 1e-12 * thr)
        return Verdict::inconclusive("radial-perturbation-threshold",
                                     det.str() + "; |C| within float margin of n/s");
    if (r > thr) return Verdict::not_hyponormal("radial-perturbation-threshold", det.str());
    if (s >= 2.0 * n * (1 + 1e-12)) return Verdict::hyponormal("radial-perturbation-threshold", det.str());
    if (s >= 2.0 * n * (1 - 1e-12))
        return Verdict::inconclusive("radial-perturbation-threshold",
                                     det.str() + "; s within float margin of 2n");
    return Verdict::inconclusive("radial-perturbation-threshold", det.str() + "; s < 2n");
}

Rat exists_breaking_s(int n, const CRat& C) {
    if (n < 1) throw std::invalid_argument("exists_breaking_s: n must be positive");
    if (C.is_zero()) throw std::invalid_argument("exists_breaking_s: C must be nonzero");
    Rat q = C.abs2();
    // smallest integer j >= 1/|C|, exactly: j^2 q >= 1
    mpz_class j;
    mpz_class flo = q.get_den() / q.get_num();
    mpz_sqrt(j.get_mpz_t(), flo.get_mpz_t());
    while (Rat(j * j) * q < 1) ++j;
    if (j < 1) j = 1;
    return Rat(2 * n * j);
}

Verdict classify_pure_radial_power(int n, const Rat& s) {
    if (n < 1) throw std::invalid_argument("classify_pure_radial_power: n must be positive");
    if (sgn(s) < 0) throw std::invalid_argument("classify_pure_radial_power: s must be nonnegative");
    std::ostringstream det;
    det << "n=" << n << " s=" << s;
    return Verdict::hyponormal("analytic-radial-product", det.str());
}

Verdict classify_conjugate_pair(int n, const Rat& s, const CRat& a) {
    if (n < 1) throw std::invalid_argument("classify_conjugate_pair: n must be positive");
    if (sgn(s) < 0) throw std::invalid_argument("classify_conjugate_pair: s must be nonnegative");
    Rat q = a.abs2();
    std::ostringstream det;
    det << "n=" << n << " s=" << s << " |a|^2=" << q;
    if (q <= 1) return Verdict::hyponormal("conjugate-pair-balance", det.str());
    // witness u = e_0: form value sigma'_0 (1 - |a|^2) < 0, exact
    symbol::RadialSymbol phi;
    phi.terms.emplace_back(CRat(Rat(1)), n, 0, s);
    phi.terms.emplace_back(a, 0, n, s);
    auto M = commutator::commutator_form(symbol::normalize(phi), 0);
    std::vector<CRat> u{CRat(Rat(1))};
    Rat value = M.quadratic_form(u);
    return Verdict::not_hyponormal("conjugate-pair-balance", det.str(),
                                   Witness{std::move(u), value, 0});
}

Verdict classify_algebraic(int m, const std::vector<Rat>& exponents,
                           const std::vector<CRat>& coeffs) {
    if (m < 1) throw std::invalid_argument("classify_algebraic: m must be positive");
    std::ostringstream base;
    base << "m=" << m << " terms=" << exponents.size();
    if (coeffs.size() == 1 && exponents.size() == 2 && exponents[0] != exponents[1]) {
        const Rat &s0 = exponents[0], &s1 = exponents[1];
        const CRat& a1 = coeffs[0];
        if (a1 == CRat(Rat(-1)))
            return Verdict::not_hyponormal("ray-positivity/negative-leading-coefficient",
                                           base.str() + "; a1 = -1");
        // m + s1 < (s1 - s0) Re[1/(1+a1)]
        CRat w = CRat(Rat(1)) + a1;
        Rat w2 = w.abs2();
        if ((Rat(m) + s1) * w2 < (s1 - s0) * w.re)
            return Verdict::not_hyponormal("ray-positivity/negative-leading-coefficient",
                                           base.str());
        if (sgn(a1.re) > 0)
            return Verdict::hyponormal("ray-positivity/positive-coefficients", base.str());
    }
    RealPolynomial<Rat> p = alph_polynomial<Rat>(m, exponents, coeffs);
    if (p.is_zero()) return Verdict::hyponormal("ray-positivity", base.str() + "; identically zero");
    RayCheck rc = check_positivity_on_ray(p, m);
    if (rc.nonnegative()) return Verdict::hyponormal("ray-positivity", base.str());
    return Verdict::not_hyponormal("ray-positivity",
                                   base.str() + "; violated at alpha=" + std::to_string(rc.violated_at));
}

Verdict classify_algebraic(int m, const std::vector<double>& exponents,
                           const std::vector<std::complex<double>>& coeffs) {
    std::vector<Cplx<double>> cc;
    for (auto& c : coeffs) cc.push_back({c.real(), c.imag()});
    RealPolynomial<double> p = alph_polynomial<double>(m, exponents, cc);
    if (p.is_zero()) return Verdict::hyponormal("ray-positivity", "identically zero (float path)");
    RayCheck rc = check_positivity_on_ray(p, m);
    switch (rc.status) {
        case RayCheck::Status::Nonnegative:
            return Verdict::hyponormal("ray-positivity", "float path");
        case RayCheck::Status::Violated:
            return Verdict::not_hyponormal(
                "ray-positivity", "float path; violated at alpha=" + std::to_string(rc.violated_at));
        default:
            return Verdict::inconclusive("ray-positivity",
                                         "float path: value within margin of zero");
    }
}

commutator::DeltaPrimeCheck check_delta_prime_positive(int m, int n, const Rat& s, const Rat& t,
                                                       long K) {
    return commutator::check_delta_prime(m, n, s, t, K);
}

// ---------------------------------------------------------------------------
// dispatcher
// ---------------------------------------------------------------------------

namespace {

// sqrt of an exact rational if it is a perfect square
std::optional<Rat> exact_sqrt(const Rat& q) {
    if (sgn(q) < 0) return std::nullopt;
    mpz_class num = q.get_num(), den = q.get_den();
    if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
        mpz_class rn, rd;
        mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
        mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
        return Rat(rn, rd);
    }
    return std::nullopt;
}

// Exact sign of Q(r) at r = sqrt(q): Q(r) = W r^2 - 2 D r + S < 0
// iff 2 D sqrt(q) > W q + S  iff  4 D^2 q > (W q + S)^2 (rhs nonnegative there).
bool quadratic_negative_at_sqrt(const commutator::QuadraticCoeffs& c, const Rat& q) {
    Rat rhs = c.omega_sum * q + c.sigma_sum;
    if (sgn(rhs) < 0) return true;  // only possible for the primed family (W < 0)
    return 4 * c.delta_sum * c.delta_sum * q > rhs * rhs;
}

Verdict eigen_fallback(const symbol::RadialSymbol& phi, const ClassifyOptions& opts) {
    commutator::CertificateOptions co;
    co.tol = opts.tol;
    co.schedule.clear();
    for (int N = 32; N <= opts.max_truncation; N *= 2) co.schedule.push_back(N);
    if (co.schedule.empty()) co.schedule.push_back(opts.max_truncation);
    return commutator::min_eigen_certificate(phi, co);
}

}  // namespace

Verdict classify(const symbol::RadialSymbol& phi, const ClassifyOptions& opts) {
    symbol::RadialSymbol p = symbol::normalize(phi);
    if (p.empty()) return Verdict::hyponormal("zero-symbol");
    if (symbol::is_analytic(p)) return Verdict::hyponormal("analytic-symbol");
    if (symbol::is_self_adjoint(p)) return Verdict::hyponormal("self-adjoint-symbol");
    const auto& T = p.terms;

    // z^n |z|^s
    if (T.size() == 1 && T[0].anti == 0 && T[0].holo >= 1)
        return classify_pure_radial_power(T[0].holo, T[0].radial);

    // z^m (sum of |z|^{s_j}) : all terms share the same z power, no zbar
    {
        bool match = T.size() >= 2;
        for (const auto& t : T)
            match = match && t.anti == 0 && t.holo == T[0].holo && t.holo >= 1 && sgn(t.radial) > 0;
        if (match) {
            std::vector<Rat> exps;
            std::vector<CRat> coeffs;
            for (const auto& t : T) exps.push_back(t.radial);
            for (size_t i = 1; i < T.size(); ++i) coeffs.push_back(div(T[i].coeff, T[0].coeff));
            return classify_algebraic(T[0].holo, exps, coeffs);
        }
    }

    if (T.size() == 2) {
        const auto &t0 = T[0], &t1 = T[1];
        // z^n + C |z|^s
        auto try_zn_radial = [&](const symbol::Monomial& an, const symbol::Monomial& rad) -> std::optional<Verdict> {
            if (an.anti != 0 || an.holo < 1 || sgn(an.radial) != 0) return std::nullopt;
            if (rad.holo != 0 || rad.anti != 0 || sgn(rad.radial) <= 0) return std::nullopt;
            int n = an.holo;
            Rat s = rad.radial;
            CRat C = div(rad.coeff, an.coeff);
            Verdict v = classify_zn_radial(n, s, C);
            if (v.status != Status::Inconclusive) return v;
            // refinement: exact quotient at the pencil extremizer refutes
            // |C| above it
            auto est = extremal::pencil_infimum(n, to_double(s), 256);
            std::vector<Rat> u;
            u.reserve(est.vector.size());
            for (double x : est.vector) u.push_back(rat_from_double(x));
            if (auto quot = extremal::cinf_quotient<Rat>(n, s, u)) {
                if (C.abs2() > (*quot) * (*quot)) {
                    std::ostringstream det;
                    det << "|C| exceeds the exact quotient " << to_double(*quot)
                        << " of a trial vector (truncation " << est.truncation << ")";
                    return Verdict::not_hyponormal("trial-quotient", det.str());
                }
            }
            Verdict e = eigen_fallback(p, opts);
            if (e.status == Status::NotHyponormal) return e;
            v.detail += "; eigen search found no witness";
            return v;
        };
        if (auto v = try_zn_radial(t0, t1)) return *v;
        if (auto v = try_zn_radial(t1, t0)) return *v;

        // z^n|z|^s + a z^m|z|^t  (m < n)
        auto try_additive = [&](const symbol::Monomial& big, const symbol::Monomial& small)
            -> std::optional<Verdict> {
            if (big.anti != 0 || small.anti != 0) return std::nullopt;
            if (!(small.holo >= 1 && big.holo > small.holo)) return std::nullopt;
            int n = big.holo, m = small.holo;
            Rat s = big.radial, t = small.radial;
            Rat q = div(small.coeff, big.coeff).abs2();  // |a|^2
            double r = std::sqrt(to_double(q));
            std::ostringstream base;
            base << "m=" << m << " n=" << n << " s=" << s << " t=" << t << " |a|=" << r;

            auto safe = extremal::safe_interval_complement(m, n, s, t);
            double cushion = 1e-9 * std::max(1.0, safe.r_high);
            if (r < safe.r_low - cushion || r > safe.r_high + cushion)
                return Verdict::hyponormal("decay-envelope-safe-interval",
                                           base.str() + "; outside [" + std::to_string(safe.r_low) +
                                               ", " + std::to_string(safe.r_high) + "]");

            auto region = extremal::excluded_region(m, n, s, t, opts.region_budget);
            if (const auto* ann = region.witness_for(r)) {
                commutator::WeightSequences<Rat> w(m, n, s, t);
                auto qc = commutator::quadratic_coeffs(w, ann->trial, false);
                if (quadratic_negative_at_sqrt(qc, q)) {
                    Verdict v = Verdict::not_hyponormal(
                        "excluded-annulus", base.str() + "; trial " + ann->trial_id);
                    if (auto rr = exact_sqrt(q)) {
                        std::vector<CRat> uu;
                        for (const auto& x : ann->trial) uu.push_back(CRat(x));
                        Rat value = qc.omega_sum * q - 2 * qc.delta_sum * (*rr) + qc.sigma_sum;
                        v.witness = Witness{std::move(uu), value,
                                            static_cast<int>(ann->trial.size()) - 1};
                    }
                    return v;
                }
            }
            Verdict e = eigen_fallback(p, opts);
            if (e.status == Status::NotHyponormal) return e;
            return Verdict::inconclusive("additive-family",
                                         base.str() + "; between the safe and excluded regions",
                                         e.min_eigenvalue_seen);
        };
        if (auto v = try_additive(t0, t1)) return *v;
        if (auto v = try_additive(t1, t0)) return *v;

        // z^n|z|^s + a zbar^m|z|^t
        auto try_conjugate = [&](const symbol::Monomial& holo_t, const symbol::Monomial& anti_t)
            -> std::optional<Verdict> {
            if (holo_t.anti != 0 || holo_t.holo < 1) return std::nullopt;
            if (anti_t.holo != 0 || anti_t.anti < 1) return std::nullopt;
            int n = holo_t.holo, m = anti_t.anti;
            Rat s = holo_t.radial, t = anti_t.radial;
            CRat a = div(anti_t.coeff, holo_t.coeff);
            if (m == n && s == t) return classify_conjugate_pair(n, s, a);
            Rat q = a.abs2();
            std::ostringstream base;
            base << "m=" << m << " n=" << n << " s=" << s << " t=" << t;
            auto check = commutator::check_delta_prime(m, n, s, t, 20000);
            if (check.holds()) {
                commutator::WeightSequences<Rat> w(m, n, s, t);
                // finite trial family; exceeding any single bound refutes
                std::vector<std::pair<std::string, std::vector<Rat>>> trials;
                for (int k = 0; k <= 32; ++k) {
                    std::vector<Rat> u(k + n + m + 1, 0);
                    u[k] = 1;
                    u[k + n + m] = 1;
                    trials.emplace_back("pair:" + std::to_string(k), std::move(u));
                }
                for (int x = 2; x <= 64; x *= 2) {
                    std::vector<Rat> u(x * x + 1, 0);
                    for (int k = x; k <= x * x; ++k) u[k] = k + 1;
                    trials.emplace_back("block-linear:" + std::to_string(x), std::move(u));
                }
                for (auto& [id, u] : trials) {
                    auto qc = commutator::quadratic_coeffs(w, u, /*primed=*/true);
                    if (quadratic_negative_at_sqrt(qc, q))
                        return Verdict::not_hyponormal("conjugate-trial-bound",
                                                       base.str() + "; trial " + id);
                }
            }
            Verdict e = eigen_fallback(p, opts);
            if (e.status == Status::NotHyponormal) return e;
            return Verdict::inconclusive(
                "conjugate-family",
                base.str() + (check.holds() ? "; no refuting trial found"
                                            : "; delta' positivity hypothesis not verified"),
                e.min_eigenvalue_seen);
        };
        if (auto v = try_conjugate(t0, t1)) return *v;
        if (auto v = try_conjugate(t1, t0)) return *v;
    }

    Verdict e = eigen_fallback(p, opts);
    if (e.status == Status::NotHyponormal) return e;
    return Verdict::inconclusive("unclassified",
                                 "no theorem family matched; " + e.detail, e.min_eigenvalue_seen);
}

}  // namespace hypo::classifier
