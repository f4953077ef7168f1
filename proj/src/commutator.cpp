#include "hypo/commutator.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace hypo::commutator {

TruncatedForm::TruncatedForm(int size, int bandwidth) : size_(size), band_(bandwidth) {
    if (size < 1 || bandwidth < 0) throw std::invalid_argument("TruncatedForm: bad dimensions");
    diag_.resize(band_ + 1);
    for (int d = 0; d <= band_; ++d) diag_[d].assign(std::max(0, size_ - d), CRat());
}

CRat TruncatedForm::entry(int i, int j) const {
    if (i < 0 || j < 0 || i >= size_ || j >= size_) throw std::out_of_range("TruncatedForm::entry");
    if (i > j) return entry(j, i).conj();
    int d = j - i;
    if (d > band_) return CRat();
    return diag_[d][i];
}

void TruncatedForm::add(int i, int j, const CRat& v) {
    if (i > j || j - i > band_ || i < 0 || j >= size_)
        throw std::out_of_range("TruncatedForm::add");
    diag_[j - i][i] += v;
}

Rat TruncatedForm::quadratic_form(const std::vector<CRat>& u) const {
    Rat total = 0;
    int K = std::min<int>(size_, static_cast<int>(u.size()));
    for (int i = 0; i < K; ++i) {
        total += diag_[0][i].re * u[i].abs2();
        for (int d = 1; d <= band_ && i + d < K; ++d) {
            // 2 Re[conj(u_i) M(i,i+d) u_{i+d}]
            CRat cross = u[i].conj() * diag_[d][i] * u[i + d];
            total += 2 * cross.re;
        }
    }
    return total;
}

bool TruncatedForm::is_real() const {
    for (const auto& dv : diag_)
        for (const auto& e : dv)
            if (!e.is_real()) return false;
    return true;
}

Eigen::MatrixXd TruncatedForm::to_real_matrix() const {
    Eigen::MatrixXd M = Eigen::MatrixXd::Zero(size_, size_);
    for (int d = 0; d <= band_; ++d)
        for (int i = 0; i + d < size_; ++i) {
            double v = to_double(diag_[d][i].re);
            M(i, i + d) = v;
            M(i + d, i) = v;
        }
    return M;
}

Eigen::MatrixXcd TruncatedForm::to_complex_matrix() const {
    Eigen::MatrixXcd M = Eigen::MatrixXcd::Zero(size_, size_);
    for (int d = 0; d <= band_; ++d)
        for (int i = 0; i + d < size_; ++i) {
            std::complex<double> v = to_std_complex(diag_[d][i]);
            M(i, i + d) = v;
            M(i + d, i) = std::conj(v);
        }
    return M;
}

TruncatedForm commutator_form(const symbol::RadialSymbol& phi, int N) {
    if (N < 0) throw std::invalid_argument("commutator_form: N must be >= 0");
    if (!symbol::is_normalized(phi)) throw std::invalid_argument("commutator_form: symbol not normalized");

    // Degree-shift range of the symbol terms fixes the bandwidth.
    int band = 0;
    if (!phi.terms.empty()) {
        int lo = phi.terms.front().holo - phi.terms.front().anti, hi = lo;
        for (const auto& t : phi.terms) {
            lo = std::min(lo, t.holo - t.anti);
            hi = std::max(hi, t.holo - t.anti);
        }
        band = std::min(hi - lo, N);
    }
    TruncatedForm M(N + 1, band);
    if (phi.terms.empty()) return M;

    symbol::RadialSymbol phibar = symbol::normalize(symbol::conjugate(phi));
    std::vector<std::vector<projection::ScaledMonomial<Rat>>> A(N + 1), B(N + 1);
    for (int j = 0; j <= N; ++j) {
        A[j] = projection::toeplitz_apply(phi, j);
        B[j] = projection::toeplitz_apply(phibar, j);
    }

    auto pair_sum = [](const std::vector<projection::ScaledMonomial<Rat>>& ci,
                       const std::vector<projection::ScaledMonomial<Rat>>& cj) {
        // sum over matching degrees of c_j(d) conj(c_i(d)) / (d+1)
        CRat acc;
        size_t a = 0, b = 0;
        while (a < ci.size() && b < cj.size()) {
            if (ci[a].degree < cj[b].degree)
                ++a;
            else if (ci[a].degree > cj[b].degree)
                ++b;
            else {
                acc += cj[b].coeff * ci[a].coeff.conj() * Rat(1, ci[a].degree + 1);
                ++a;
                ++b;
            }
        }
        return acc;
    };

    for (int j = 0; j <= N; ++j) {
        for (int i = std::max(0, j - band); i <= j; ++i) {
            CRat v = pair_sum(A[i], A[j]) - pair_sum(B[i], B[j]);
            if (!v.is_zero()) M.add(i, j, v);
        }
    }
    return M;
}

// ---------------------------------------------------------------------------
// Weight sequences
// ---------------------------------------------------------------------------

namespace {

// 4(k+p) / (d1 * d2)
template <class T>
T weight_frac(long kp, const T& d1, const T& d2) {
    return scalar_traits<T>::from_long(4 * kp) / (d1 * d2);
}

}  // namespace

template <class T>
WeightSequences<T>::WeightSequences(int m, int n, T s, T t)
    : m_(m), n_(n), s_(std::move(s)), t_(std::move(t)) {
    if (m < 1 || n < 1) throw std::invalid_argument("WeightSequences: m, n must be positive");
    if (to_double(s_) < 0 || to_double(t_) < 0)
        throw std::invalid_argument("WeightSequences: s, t must be nonnegative");
}

template <class T>
T WeightSequences<T>::sigma(long k) const {
    T d = scalar_traits<T>::from_long(2 * (n_ + k) + 2) + s_;
    T v = weight_frac<T>(k + n_ + 1, d, d);
    if (k >= n_) {
        T d2 = scalar_traits<T>::from_long(2 * k + 2) + s_;
        v -= weight_frac<T>(k - n_ + 1, d2, d2);
    }
    return v;
}

template <class T>
T WeightSequences<T>::omega(long k) const {
    T d = scalar_traits<T>::from_long(2 * (m_ + k) + 2) + t_;
    T v = weight_frac<T>(k + m_ + 1, d, d);
    if (k >= m_) {
        T d2 = scalar_traits<T>::from_long(2 * k + 2) + t_;
        v -= weight_frac<T>(k - m_ + 1, d2, d2);
    }
    return v;
}

template <class T>
T WeightSequences<T>::delta(long k) const {
    if (m_ > n_) throw std::logic_error("delta: requires m <= n");
    T ds = scalar_traits<T>::from_long(2 * (k + n_) + 2) + s_;
    T dt = scalar_traits<T>::from_long(2 * (k + n_) + 2) + t_;
    T v = weight_frac<T>(k + n_ + 1, ds, dt);
    if (k >= m_) {
        T d1 = scalar_traits<T>::from_long(2 * (k + n_ - m_) + 2) + s_;
        T d2 = scalar_traits<T>::from_long(2 * k + 2) + t_;
        v -= weight_frac<T>(k - m_ + 1, d1, d2);
    }
    return v;
}

template <class T>
T WeightSequences<T>::omega_prime(long k) const {
    T d = scalar_traits<T>::from_long(2 * (m_ + k) + 2) + t_;
    T v = -weight_frac<T>(k + m_ + 1, d, d);
    if (k >= m_) {
        T d2 = scalar_traits<T>::from_long(2 * k + 2) + t_;
        v += weight_frac<T>(k - m_ + 1, d2, d2);
    }
    return v;
}

template <class T>
T WeightSequences<T>::delta_prime(long k) const {
    T a1 = scalar_traits<T>::from_long(2 * (k + n_) + 2) + s_;
    T a2 = scalar_traits<T>::from_long(2 * (k + n_ + m_) + 2) + t_;
    T b1 = scalar_traits<T>::from_long(2 * (k + n_ + m_) + 2) + s_;
    T b2 = scalar_traits<T>::from_long(2 * (k + m_) + 2) + t_;
    return weight_frac<T>(k + n_ + 1, a1, a2) - weight_frac<T>(k + m_ + 1, b1, b2);
}

template <class T>
T WeightSequences<T>::sigma_limit() const {
    return scalar_traits<T>::from_long(n_) * (scalar_traits<T>::from_long(n_) + s_);
}

template <class T>
T WeightSequences<T>::omega_limit() const {
    return scalar_traits<T>::from_long(m_) * (scalar_traits<T>::from_long(m_) + t_);
}

template <class T>
T WeightSequences<T>::delta_limit() const {
    return scalar_traits<T>::from_long(m_ * n_) +
           (scalar_traits<T>::from_long(m_) * s_ + scalar_traits<T>::from_long(n_) * t_) /
               scalar_traits<T>::from_long(2);
}

template <class T>
T WeightSequences<T>::delta_prime_limit() const {
    // Both branches of delta'_k expand as x + c2 x^2 + g x^3 + O(x^4) in
    // x = 1/k with identical c2, so delta'_k ~ (g1 - g2)/k^3 with
    // g = B^2 + C^2 + BC - a(B+C) for (k+a)/((k+B)(k+C)).
    T half = scalar_traits<T>::ratio(1, 2);
    auto g = [&](const T& a, const T& B, const T& C) -> T {
        return B * B + C * C + B * C - a * (B + C);
    };
    T a1 = scalar_traits<T>::from_long(n_ + 1);
    T B1 = scalar_traits<T>::from_long(n_ + 1) + half * s_;
    T C1 = scalar_traits<T>::from_long(n_ + m_ + 1) + half * t_;
    T a2 = scalar_traits<T>::from_long(m_ + 1);
    T B2 = scalar_traits<T>::from_long(n_ + m_ + 1) + half * s_;
    T C2 = scalar_traits<T>::from_long(m_ + 1) + half * t_;
    return g(a1, B1, C1) - g(a2, B2, C2);
}

template class WeightSequences<Rat>;
template class WeightSequences<double>;

QuadraticCoeffs quadratic_coeffs(const WeightSequences<Rat>& w, const std::vector<Rat>& u,
                                 bool primed) {
    long K = static_cast<long>(u.size());
    long gap = primed ? w.n() + w.m() : w.n() - w.m();
    QuadraticCoeffs c{0, 0, 0};
    for (long k = 0; k < K; ++k) {
        if (sgn(u[k]) == 0) continue;
        Rat u2 = u[k] * u[k];
        c.omega_sum += (primed ? w.omega_prime(k) : w.omega(k)) * u2;
        c.sigma_sum += (primed ? w.sigma_prime(k) : w.sigma(k)) * u2;
        if (k + gap < K) {
            Rat d = primed ? w.delta_prime(k) : w.delta(k);
            c.delta_sum += abs(d * u[k] * u[k + gap]);
        }
    }
    return c;
}

Rat worst_case_quadratic(int m, int n, const Rat& s, const Rat& t, const std::vector<Rat>& u,
                         const Rat& r) {
    if (m > n) throw std::invalid_argument("worst_case_quadratic: requires m <= n");
    if (sgn(r) < 0) throw std::invalid_argument("worst_case_quadratic: r must be >= 0");
    for (const auto& v : u)
        if (sgn(v) < 0) throw std::invalid_argument("worst_case_quadratic: negative entry in u");
    WeightSequences<Rat> w(m, n, s, t);
    QuadraticCoeffs c = quadratic_coeffs(w, u, /*primed=*/false);
    return r * r * c.omega_sum - 2 * r * c.delta_sum + c.sigma_sum;
}

DeltaPrimeCheck check_delta_prime(int m, int n, const Rat& s, const Rat& t, long K) {
    WeightSequences<Rat> w(m, n, s, t);
    if (m == n && s == t)
        return {DeltaPrimeCheck::Result::IdenticallyZero, -1, 0, 0};
    for (long k = 0; k <= K; ++k) {
        if (sgn(w.delta_prime(k)) <= 0)
            return {DeltaPrimeCheck::Result::FailsAt, k, k, 0};
    }
    int asign = sgn(w.delta_prime_limit());
    if (asign > 0) return {DeltaPrimeCheck::Result::Holds, -1, K, 1};
    if (asign < 0) return {DeltaPrimeCheck::Result::NegativeAsymptote, -1, K, -1};
    return {DeltaPrimeCheck::Result::UndeterminedTail, -1, K, 0};
}

// ---------------------------------------------------------------------------
// Eigenvalue certificate search
// ---------------------------------------------------------------------------

namespace {

struct EigResult {
    double min_eig;
    Eigen::VectorXcd vec;
};

EigResult min_eigenpair(const TruncatedForm& M) {
    if (M.is_real()) {
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(M.to_real_matrix());
        if (es.info() != Eigen::Success) throw std::runtime_error("eigen decomposition failed");
        Eigen::VectorXd v = es.eigenvectors().col(0);
        return {es.eigenvalues()(0), v.cast<std::complex<double>>()};
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(M.to_complex_matrix());
    if (es.info() != Eigen::Success) throw std::runtime_error("eigen decomposition failed");
    return {es.eigenvalues()(0), es.eigenvectors().col(0)};
}

}  // namespace

Verdict min_eigen_certificate(const symbol::RadialSymbol& phi, const CertificateOptions& opts) {
    symbol::RadialSymbol p = symbol::normalize(phi);
    double best = std::numeric_limits<double>::infinity();
    for (int N : opts.schedule) {
        TruncatedForm M = commutator_form(p, N);
        EigResult e = min_eigenpair(M);
        best = std::min(best, e.min_eig);
        if (e.min_eig < -opts.tol) {
            // Exact replay: the double eigenvector converts to rationals
            // without rounding (dyadic), and the form matrix is exact.
            std::vector<CRat> u(N + 1);
            for (int i = 0; i <= N; ++i)
                u[i] = CRat(rat_from_double(e.vec(i).real()), rat_from_double(e.vec(i).imag()));
            Rat value = M.quadratic_form(u);
            if (sgn(value) < 0) {
                std::ostringstream det;
                det << "negative form value at truncation N=" << N
                    << ", min eigenvalue " << e.min_eig;
                return Verdict::not_hyponormal("eigen-certificate", det.str(),
                                               Witness{std::move(u), value, N});
            }
        }
    }
    std::ostringstream det;
    det << "no negative witness found; smallest eigenvalue seen " << best;
    return Verdict::inconclusive("eigen-certificate", det.str(), best);
}

}  // namespace hypo::commutator
