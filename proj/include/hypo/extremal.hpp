#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "hypo/commutator.hpp"
#include "hypo/rational.hpp"

namespace hypo::extremal {

/// Open interval of |a| values; endpoints are never claimed.
struct Interval {
    double lo = 0, hi = 0;
};

/// Disjoint union of open intervals, canonically merged.
class IntervalUnion {
  public:
    void add(double lo, double hi);
    bool contains(double r) const;
    bool empty() const { return intervals_.empty(); }
    const std::vector<Interval>& intervals() const { return intervals_; }

  private:
    std::vector<Interval> intervals_;
};

enum class EstimateSide { UpperBound, PencilEstimate };

/// Value of the extremal quotient at (or optimized over) a trial subspace.
struct RatioEstimate {
    double value = 0;
    std::vector<double> vector;  // nonnegative extremizer / trial vector
    int truncation = 0;
    EstimateSide side = EstimateSide::PencilEstimate;
};

/// The quotient whose infimum over nonnegative sequences decides
/// hyponormality of T_{z^n + C|z|^s}:
///   [sum_{k<n} u_k^2/(k+n+1) + sum_{k>=n} n^2 u_k^2/((k+1)^2(k+n+1))]
///   / [ s n sum_k u_k u_{k+n} / ((k+n+1)(k+1+s/2)(k+n+1+s/2)) ].
/// Returns nullopt when the coupling sum vanishes (no constraint).
/// Rejects zero or negative vectors.
template <class T>
std::optional<T> cinf_quotient(int n, const T& s, const std::vector<T>& u);

/// Optimizes the quotient over all vectors supported on degrees 0..N via the
/// symmetric pencil B x = lambda A x (A the diagonal numerator weights, B the
/// band-n coupling). The returned value is a rigorous upper bound for the
/// true infimum; the extremizer is returned entrywise nonnegative.
RatioEstimate pencil_infimum(int n, double s, int N);

/// Open annulus of |a| excluded by the trial vector u for the symbol family
/// z^n|z|^s + a z^m|z|^t (m < n): the interval between the roots of Q_u when
/// the radicand is positive, else nullopt (no constraint). Radicand sign is
/// decided exactly.
std::optional<Interval> annulus_for_trial(int m, int n, const Rat& s, const Rat& t,
                                          const std::vector<Rat>& u);

/// One annulus together with its generating trial vector (for exact replay).
struct Annulus {
    double lo = 0, hi = 0;
    std::string trial_id;
    std::vector<Rat> trial;
};

/// Union of excluded annuli over the deterministic trial family: unit-vector
/// pairs, flat and linear-growth blocks at geometric scales up to `budget`,
/// and eigen-extremizers of the worst-phase quadratic. Sound: every point of
/// the union replays to Q_u < 0 at its generating trial.
struct ExcludedRegion {
    std::vector<Annulus> annuli;
    IntervalUnion merged;

    bool contains(double r) const { return merged.contains(r); }
    /// The generating trial for a contained point (nullptr if outside).
    const Annulus* witness_for(double r) const;
};

ExcludedRegion excluded_region(int m, int n, const Rat& s, const Rat& t, int budget = 200);

/// Large-scale limit of the block-trial annuli:
/// ((2mn+ms+nt -|ms-nt|)/(2m(m+t)), (... + |ms-nt|)/(2m(m+t))), exact;
/// nullopt when ms == nt. Requires m < n.
std::optional<std::pair<Rat, Rat>> asymptotic_interval(int m, int n, const Rat& s, const Rat& t);

/// Thresholds (r_low, r_high) such that |a| outside [r_low, r_high] certifies
/// hyponormality of z^n|z|^s + a z^m|z|^t, from the cubic-decay envelope
/// constants of the weight sequences. Requires m < n.
struct SafeComplement {
    double r_low = 0, r_high = 0;
    double c_minus = 0, c_plus = 0;  // envelope constants
};
SafeComplement safe_interval_complement(int m, int n, const Rat& s, const Rat& t);

/// Reported when the strict-positivity hypothesis on delta'_k fails.
struct HypothesisFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// For the family z^n|z|^s + a zbar^m|z|^t: the largest |a| this trial vector
/// allows, (D - sqrt(D^2 - W S)) / W with the primed weight sums. The
/// operator is hyponormal iff |a| <= the infimum of this bound over all u.
/// Requires delta'_k > 0 (checked; HypothesisFailure otherwise).
double conjugate_bound_for_trial(int m, int n, const Rat& s, const Rat& t,
                                 const std::vector<Rat>& u);

}  // namespace hypo::extremal
