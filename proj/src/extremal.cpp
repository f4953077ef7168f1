#include "hypo/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace hypo::extremal {

void IntervalUnion::add(double lo, double hi) {
    if (!(lo < hi) || hi <= 0) return;
    lo = std::max(lo, 0.0);
    std::vector<Interval> out;
    Interval cur{lo, hi};
    for (const auto& iv : intervals_) {
        if (iv.hi < cur.lo || iv.lo > cur.hi) {
            out.push_back(iv);
        } else {
            // overlapping or touching open intervals; touching ones still
            // merge only if they genuinely overlap
            if (iv.hi > cur.lo && iv.lo < cur.hi) {
                cur.lo = std::min(cur.lo, iv.lo);
                cur.hi = std::max(cur.hi, iv.hi);
            } else {
                out.push_back(iv);
            }
        }
    }
    out.push_back(cur);
    std::sort(out.begin(), out.end(), [](const Interval& a, const Interval& b) { return a.lo < b.lo; });
    intervals_ = std::move(out);
}

bool IntervalUnion::contains(double r) const {
    for (const auto& iv : intervals_)
        if (iv.lo < r && r < iv.hi) return true;
    return false;
}

template <class T>
std::optional<T> cinf_quotient(int n, const T& s, const std::vector<T>& u) {
    if (n < 1) throw std::invalid_argument("cinf_quotient: n must be positive");
    long K = static_cast<long>(u.size());
    bool nonzero = false;
    for (const auto& v : u) {
        if (to_double(v) < 0) throw std::invalid_argument("cinf_quotient: negative entry");
        if (!scalar_traits<T>::is_zero(v)) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("cinf_quotient: zero vector");

    T num(0), den(0);
    T half_s = s / scalar_traits<T>::from_long(2);
    for (long k = 0; k < K; ++k) {
        if (scalar_traits<T>::is_zero(u[k])) continue;
        T u2 = u[k] * u[k];
        if (k < n)
            num += u2 / scalar_traits<T>::from_long(k + n + 1);
        else
            num += scalar_traits<T>::from_long(n * n) * u2 /
                   (scalar_traits<T>::from_long((k + 1) * (k + 1) * (k + n + 1)));
        if (k + n < K) {
            T d1 = scalar_traits<T>::from_long(k + n + 1);
            T d2 = scalar_traits<T>::from_long(k + 1) + half_s;
            T d3 = scalar_traits<T>::from_long(k + n + 1) + half_s;
            den += u[k] * u[k + n] / (d1 * d2 * d3);
        }
    }
    den = s * scalar_traits<T>::from_long(n) * den;
    if (scalar_traits<T>::is_zero(den)) return std::nullopt;
    return num / den;
}

template std::optional<Rat> cinf_quotient<Rat>(int, const Rat&, const std::vector<Rat>&);
template std::optional<double> cinf_quotient<double>(int, const double&, const std::vector<double>&);

RatioEstimate pencil_infimum(int n, double s, int N) {
    if (n < 1 || s <= 0) throw std::invalid_argument("pencil_infimum: need n >= 1, s > 0");
    if (N < n) throw std::invalid_argument("pencil_infimum: need N >= n");
    int dim = N + 1;
    Eigen::VectorXd a(dim);
    for (int k = 0; k < dim; ++k)
        a(k) = (k < n) ? 1.0 / (k + n + 1)
                       : double(n) * n / (double(k + 1) * (k + 1) * (k + n + 1));
    // C = A^{-1/2} B A^{-1/2}; the nonnegativity constraint drops without
    // loss since B has nonnegative entries.
    Eigen::MatrixXd C = Eigen::MatrixXd::Zero(dim, dim);
    for (int k = 0; k + n < dim; ++k) {
        double b = s * n / ((k + n + 1.0) * (k + 1 + s / 2) * (k + n + 1 + s / 2)) / 2.0;
        double v = b / std::sqrt(a(k) * a(k + n));
        C(k, k + n) = v;
        C(k + n, k) = v;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C);
    if (es.info() != Eigen::Success) throw std::runtime_error("pencil_infimum: eigen decomposition failed");
    double lam = es.eigenvalues()(dim - 1);
    if (!(lam > 0)) throw std::runtime_error("pencil_infimum: nonpositive extremal eigenvalue");
    Eigen::VectorXd y = es.eigenvectors().col(dim - 1);
    RatioEstimate out;
    out.value = 1.0 / lam;
    out.truncation = N;
    out.side = EstimateSide::PencilEstimate;
    out.vector.resize(dim);
    for (int k = 0; k < dim; ++k) out.vector[k] = std::abs(y(k)) / std::sqrt(a(k));
    return out;
}

namespace {

// Exact quadratic coefficients, then float endpoints.
std::optional<Interval> annulus_from_coeffs(const commutator::QuadraticCoeffs& c) {
    Rat radicand = c.delta_sum * c.delta_sum - c.omega_sum * c.sigma_sum;
    if (sgn(radicand) <= 0) return std::nullopt;
    double W = to_double(c.omega_sum), D = to_double(c.delta_sum);
    double rt = std::sqrt(to_double(radicand));
    return Interval{(D - rt) / W, (D + rt) / W};
}

}  // namespace

std::optional<Interval> annulus_for_trial(int m, int n, const Rat& s, const Rat& t,
                                          const std::vector<Rat>& u) {
    if (!(m < n)) throw std::invalid_argument("annulus_for_trial: requires m < n");
    bool nonzero = false;
    for (const auto& v : u) {
        if (sgn(v) < 0) throw std::invalid_argument("annulus_for_trial: negative entry");
        if (sgn(v) != 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("annulus_for_trial: zero vector");
    commutator::WeightSequences<Rat> w(m, n, s, t);
    return annulus_from_coeffs(commutator::quadratic_coeffs(w, u, /*primed=*/false));
}

std::optional<std::pair<Rat, Rat>> asymptotic_interval(int m, int n, const Rat& s, const Rat& t) {
    if (!(m < n)) throw std::invalid_argument("asymptotic_interval: requires m < n");
    Rat ms = m * s, nt = n * t;
    if (ms == nt) return std::nullopt;
    Rat spread = abs(ms - nt);
    Rat center = 2 * m * n + ms + nt;
    Rat denom = Rat(2 * m) * (m + t);
    return std::make_pair((center - spread) / denom, (center + spread) / denom);
}

const Annulus* ExcludedRegion::witness_for(double r) const {
    for (const auto& a : annuli)
        if (a.lo < r && r < a.hi) return &a;
    return nullptr;
}

ExcludedRegion excluded_region(int m, int n, const Rat& s, const Rat& t, int budget) {
    if (!(m <= n) || m < 1) throw std::invalid_argument("excluded_region: requires 1 <= m <= n");
    if (m == n) return {};  // |1+a|^2-weighted form is never negative: no annulus
    if (budget < 2) budget = 2;
    commutator::WeightSequences<Rat> w(m, n, s, t);
    ExcludedRegion region;

    auto consider = [&](std::vector<Rat> u, std::string id) {
        auto iv = annulus_from_coeffs(commutator::quadratic_coeffs(w, u, false));
        if (!iv) return;
        region.annuli.push_back({iv->lo, iv->hi, std::move(id), std::move(u)});
    };

    // 1. unit-vector pairs e_k + e_{k+n-m}
    int gap = n - m;
    for (int k = 0; k <= std::min(64, budget); ++k) {
        std::vector<Rat> u(k + gap + 1, 0);
        u[k] = 1;
        u[k + gap] = 1;
        consider(std::move(u), "pair:" + std::to_string(k));
    }

    // 2/3. flat and linear-growth blocks on [x, x^2] at geometric scales
    std::vector<int> scales;
    for (int x = 2; x <= budget; x *= 2) scales.push_back(x);
    if (scales.empty() || scales.back() != budget) scales.push_back(budget);
    for (int x : scales) {
        long hi = static_cast<long>(x) * x;
        std::vector<Rat> flat(hi + 1, 0), lin(hi + 1, 0);
        for (long k = x; k <= hi; ++k) {
            flat[k] = 1;
            lin[k] = k + 1;
        }
        consider(std::move(flat), "block-flat:" + std::to_string(x));
        consider(std::move(lin), "block-linear:" + std::to_string(x));
    }

    // 4. eigen-extremizers of Q at a deterministic r-grid
    {
        double lo, hi;
        if (auto asym = asymptotic_interval(m, n, s, t)) {
            lo = 0.9 * to_double(asym->first);
            hi = 1.1 * to_double(asym->second);
        } else {
            double center = to_double(w.delta_limit()) / to_double(w.omega_limit());
            lo = center / 2;
            hi = center * 2;
        }
        const int grid = 9, dim = 257;
        for (int g = 0; g < grid; ++g) {
            double r = lo + (hi - lo) * g / (grid - 1);
            Eigen::MatrixXd M = Eigen::MatrixXd::Zero(dim, dim);
            for (int k = 0; k < dim; ++k) {
                M(k, k) = r * r * to_double(w.omega(k)) + to_double(w.sigma(k));
                if (k + gap < dim) {
                    double v = -r * to_double(w.delta(k));
                    M(k, k + gap) = v;
                    M(k + gap, k) = v;
                }
            }
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M);
            if (es.info() != Eigen::Success || es.eigenvalues()(0) >= 0) continue;
            Eigen::VectorXd v = es.eigenvectors().col(0);
            std::vector<Rat> u(dim);
            for (int k = 0; k < dim; ++k) u[k] = rat_from_double(std::abs(v(k)));
            std::ostringstream id;
            id << "eigen:r=" << r;
            consider(std::move(u), id.str());
        }
    }

    // deterministic merge order
    std::sort(region.annuli.begin(), region.annuli.end(),
              [](const Annulus& a, const Annulus& b) {
                  return a.lo != b.lo ? a.lo < b.lo : a.hi < b.hi;
              });
    for (const auto& a : region.annuli) region.merged.add(a.lo, a.hi);
    return region;
}

SafeComplement safe_interval_complement(int m, int n, const Rat& s, const Rat& t) {
    if (!(m < n)) throw std::invalid_argument("safe_interval_complement: requires m < n");
    commutator::WeightSequences<Rat> w(m, n, s, t);
    const long K = 5000;

    // envelope constants: C_lo/(k+1)^3 <= x_k <= C_hi/(k+1)^3 over the scan,
    // with the k -> infinity limit folded into the range (the scaled
    // sequences approach their limits monotonically in the tail; verified
    // over the last scan stretch).
    auto envelope = [&](auto&& f, const Rat& limit) {
        Rat lo, hi;
        bool first = true;
        Rat prev_gap;
        for (long k = 0; k <= K; ++k) {
            Rat cube = Rat((k + 1)) * (k + 1) * (k + 1);
            Rat v = abs(f(k)) * cube;
            if (first) {
                lo = hi = v;
                first = false;
            } else {
                lo = std::min(lo, v);
                hi = std::max(hi, v);
            }
            if (k >= K - 50) {
                Rat gap = abs(v - limit);
                if (k > K - 50 && gap > prev_gap)
                    throw std::runtime_error("safe_interval_complement: tail not settled");
                prev_gap = gap;
            }
        }
        lo = std::min(lo, limit);
        hi = std::max(hi, limit);
        return std::make_pair(lo, hi);
    };

    auto [s_lo, s_hi] = envelope([&](long k) { return w.sigma(k); }, w.sigma_limit());
    auto [o_lo, o_hi] = envelope([&](long k) { return w.omega(k); }, w.omega_limit());
    auto [d_lo, d_hi] = envelope([&](long k) { return w.delta(k); }, w.delta_limit());

    Rat c_minus = std::min({s_lo, o_lo, d_lo});
    Rat c_plus = std::max({s_hi, o_hi, d_hi});
    double q = to_double(c_plus) / to_double(c_minus);
    double nm3 = std::pow(double(n - m + 1), 3);
    double center = std::sqrt(nm3) * q;
    double rad = std::sqrt(q * q * nm3 - 1.0);
    return {center - rad, center + rad, to_double(c_minus), to_double(c_plus)};
}

double conjugate_bound_for_trial(int m, int n, const Rat& s, const Rat& t,
                                 const std::vector<Rat>& u) {
    bool nonzero = false;
    for (const auto& v : u) {
        if (sgn(v) < 0) throw std::invalid_argument("conjugate_bound_for_trial: negative entry");
        if (sgn(v) != 0) nonzero = true;
    }
    if (!nonzero) throw std::invalid_argument("conjugate_bound_for_trial: zero vector");
    long K = static_cast<long>(u.size());
    auto check = commutator::check_delta_prime(m, n, s, t, std::min<long>(K + m + n, 20000));
    if (check.result != commutator::DeltaPrimeCheck::Result::Holds &&
        check.result != commutator::DeltaPrimeCheck::Result::IdenticallyZero) {
        throw HypothesisFailure("delta' positivity hypothesis fails (delta'_k not strictly positive)");
    }
    commutator::WeightSequences<Rat> w(m, n, s, t);
    auto c = commutator::quadratic_coeffs(w, u, /*primed=*/true);
    // W < 0 always; radicand D^2 - W S > 0.
    double W = to_double(c.omega_sum), S = to_double(c.sigma_sum), D = to_double(c.delta_sum);
    return (D - std::sqrt(D * D - W * S)) / W;
}

}  // namespace hypo::extremal
