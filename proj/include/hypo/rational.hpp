#pragma once

#include <gmpxx.h>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hypo {

/// Exact rational scalar used on the exact computation path.
using Rat = mpq_class;

inline double to_double(const Rat& q) { return q.get_d(); }
inline double to_double(double x) { return x; }

/// Exact conversion of a finite double to a rational (dyadic, no rounding).
inline Rat rat_from_double(double x) {
    if (!std::isfinite(x)) throw std::invalid_argument("rat_from_double: non-finite value");
    Rat q;
    mpq_set_d(q.get_mpq_t(), x);
    return q;
}

/// Parses an exact numeric literal: integer, fraction "p/q", or decimal "12.345".
/// Throws std::invalid_argument on malformed input.
Rat rat_from_literal(const std::string& text);

std::string to_string(const Rat& q);

// Scalar traits shared by the exact and floating instantiations of the
// numeric kernels. T is Rat or double.
template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rat> {
    static Rat from_long(long v) { return Rat(v); }
    static Rat ratio(long num, long den) { return Rat(num, den); }
    static bool is_zero(const Rat& v) { return sgn(v) == 0; }
};

template <>
struct scalar_traits<double> {
    static double from_long(long v) { return static_cast<double>(v); }
    static double ratio(long num, long den) { return static_cast<double>(num) / static_cast<double>(den); }
    static bool is_zero(double v) { return v == 0.0; }
};

}  // namespace hypo
