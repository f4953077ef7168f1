#pragma once

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "hypo/complex.hpp"
#include "hypo/rational.hpp"

namespace hypo {

enum class Status { Hyponormal, NotHyponormal, Inconclusive };

inline const char* to_string(Status s) {
    switch (s) {
        case Status::Hyponormal: return "Hyponormal";
        case Status::NotHyponormal: return "NotHyponormal";
        default: return "Inconclusive";
    }
}

/// Replayable refutation: a coefficient vector whose self-commutator form
/// value is exactly negative on the stated truncation.
struct Witness {
    std::vector<CRat> vec;
    Rat value;       // exact form value, < 0
    int truncation;  // vector supported on degrees 0..truncation
};

/// Outcome of a criterion or search. NotHyponormal carries either a witness
/// or a machine-checked theorem tag; Hyponormal carries a theorem tag only.
struct Verdict {
    Status status = Status::Inconclusive;
    std::string source;  // criterion tag or search mechanism
    std::string detail;  // parameters / evidence summary
    std::optional<Witness> witness;
    double min_eigenvalue_seen = std::numeric_limits<double>::quiet_NaN();

    static Verdict hyponormal(std::string src, std::string det = {}) {
        return {Status::Hyponormal, std::move(src), std::move(det), std::nullopt,
                std::numeric_limits<double>::quiet_NaN()};
    }
    static Verdict not_hyponormal(std::string src, std::string det = {},
                                  std::optional<Witness> w = std::nullopt) {
        return {Status::NotHyponormal, std::move(src), std::move(det), std::move(w),
                std::numeric_limits<double>::quiet_NaN()};
    }
    static Verdict inconclusive(std::string src, std::string det = {},
                                double min_eig = std::numeric_limits<double>::quiet_NaN()) {
        return {Status::Inconclusive, std::move(src), std::move(det), std::nullopt, min_eig};
    }
};

}  // namespace hypo
