#pragma once

#include <vector>

#include <Eigen/Dense>

#include "hypo/complex.hpp"
#include "hypo/projection.hpp"
#include "hypo/rational.hpp"
#include "hypo/symbol.hpp"
#include "hypo/verdict.hpp"

namespace hypo::commutator {

/// Exact banded Hermitian matrix of the truncated self-commutator form:
/// for u supported on degrees 0..size-1, u* M u = ||T_phi u||^2 - ||T_phi* u||^2.
/// Contributions of basis images beyond the truncation window are summed in
/// full, so the form is exact on its truncation.
class TruncatedForm {
  public:
    TruncatedForm(int size, int bandwidth);

    int size() const { return size_; }
    int bandwidth() const { return band_; }

    /// Hermitian lookup; zero outside the band.
    CRat entry(int i, int j) const;
    /// Accumulates into entry (i, j) with i <= j, j - i <= bandwidth.
    void add(int i, int j, const CRat& v);

    /// Exact real value of u* M u (u padded/truncated to size).
    Rat quadratic_form(const std::vector<CRat>& u) const;

    bool is_real() const;
    Eigen::MatrixXd to_real_matrix() const;
    Eigen::MatrixXcd to_complex_matrix() const;

  private:
    int size_, band_;
    std::vector<std::vector<CRat>> diag_;  // diag_[d][i] = entry(i, i+d)
};

/// Assembles the exact form matrix of [T_phi*, T_phi] on degrees 0..N.
/// phi must be normalized.
TruncatedForm commutator_form(const symbol::RadialSymbol& phi, int N);

/// Closed-form weight sequences of the two-term symbol families
/// z^n|z|^s + a z^m|z|^t (unprimed, m <= n) and z^n|z|^s + a zbar^m|z|^t
/// (primed). T is Rat or double.
template <class T>
class WeightSequences {
  public:
    WeightSequences(int m, int n, T s, T t);

    int m() const { return m_; }
    int n() const { return n_; }

    T sigma(long k) const;
    T omega(long k) const;
    T delta(long k) const;  // requires m <= n
    T sigma_prime(long k) const { return sigma(k); }
    T omega_prime(long k) const;
    T delta_prime(long k) const;

    // k^3 * x_k limits as k -> infinity.
    T sigma_limit() const;  // n(n+s)
    T omega_limit() const;  // m(m+t)
    T delta_limit() const;  // mn + (ms+nt)/2
    /// Leading coefficient of delta'_k ~ c/k^3 (the k^-1 and k^-2 orders cancel).
    T delta_prime_limit() const;

  private:
    int m_, n_;
    T s_, t_;
};

/// Q_u(r) = r^2 sum omega_k u_k^2 - 2 r sum delta_k u_k u_{k+n-m} + sum sigma_k u_k^2:
/// the minimum of the commutator form over phase choices with moduli u.
/// Entries of u must be nonnegative; r = |a| >= 0. Requires m <= n.
Rat worst_case_quadratic(int m, int n, const Rat& s, const Rat& t,
                         const std::vector<Rat>& u, const Rat& r);

/// The three quadratic coefficients (W, D, S) with Q_u(r) = W r^2 - 2 D r + S,
/// from either the unprimed or the primed family.
struct QuadraticCoeffs {
    Rat omega_sum;  // W
    Rat delta_sum;  // D
    Rat sigma_sum;  // S
};
QuadraticCoeffs quadratic_coeffs(const WeightSequences<Rat>& w, const std::vector<Rat>& u,
                                 bool primed);

/// Outcome of the strict-positivity test on the primed coupling sequence.
struct DeltaPrimeCheck {
    enum class Result { Holds, FailsAt, IdenticallyZero, NegativeAsymptote, UndeterminedTail };
    Result result;
    long fail_k = -1;       // first violating index, for FailsAt
    long checked_up_to = 0;  // exact scan bound
    int asymptote_sign = 0;  // sign of the k^-3 leading coefficient

    bool holds() const { return result == Result::Holds; }
};

/// Exact sign scan of delta'_k for k <= K plus the sign of its leading
/// asymptotic coefficient.
DeltaPrimeCheck check_delta_prime(int m, int n, const Rat& s, const Rat& t, long K = 100000);

struct CertificateOptions {
    std::vector<int> schedule = {32, 64, 128, 256, 512, 1024, 2048, 4096};
    double tol = 1e-12;
};

/// Necessary-condition search: scans the truncation schedule for a negative
/// eigenvalue, re-verifies any candidate witness by exact rational evaluation,
/// and never concludes Hyponormal (truncation positivity is not sufficient).
Verdict min_eigen_certificate(const symbol::RadialSymbol& phi, const CertificateOptions& opts = {});

}  // namespace hypo::commutator
