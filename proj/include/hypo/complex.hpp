#pragma once

#include <complex>

#include "hypo/rational.hpp"

namespace hypo {

/// Minimal complex number over an arbitrary exact or floating scalar.
/// std::complex is only specified for floating-point types, so the exact
/// path needs its own.
template <class T>
struct Cplx {
    T re{};
    T im{};

    Cplx() = default;
    Cplx(T r) : re(std::move(r)) {}
    Cplx(T r, T i) : re(std::move(r)), im(std::move(i)) {}

    friend Cplx operator+(const Cplx& a, const Cplx& b) { return {a.re + b.re, a.im + b.im}; }
    friend Cplx operator-(const Cplx& a, const Cplx& b) { return {a.re - b.re, a.im - b.im}; }
    friend Cplx operator-(const Cplx& a) { return {-a.re, -a.im}; }
    friend Cplx operator*(const Cplx& a, const Cplx& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend Cplx operator*(const T& s, const Cplx& a) { return {s * a.re, s * a.im}; }
    friend Cplx operator*(const Cplx& a, const T& s) { return s * a; }
    Cplx& operator+=(const Cplx& b) { re += b.re; im += b.im; return *this; }
    Cplx& operator-=(const Cplx& b) { re -= b.re; im -= b.im; return *this; }
    Cplx& operator*=(const Cplx& b) { *this = *this * b; return *this; }
    friend bool operator==(const Cplx& a, const Cplx& b) { return a.re == b.re && a.im == b.im; }

    Cplx conj() const { return {re, -im}; }
    /// |z|^2, exact on the rational path.
    T abs2() const { return re * re + im * im; }
    bool is_zero() const { return scalar_traits<T>::is_zero(re) && scalar_traits<T>::is_zero(im); }
    bool is_real() const { return scalar_traits<T>::is_zero(im); }
};

using CRat = Cplx<Rat>;

inline Cplx<double> to_cplx_double(const CRat& z) { return {to_double(z.re), to_double(z.im)}; }
inline std::complex<double> to_std_complex(const CRat& z) { return {to_double(z.re), to_double(z.im)}; }

/// Exact complex division (denominator must be nonzero).
template <class T>
Cplx<T> div(const Cplx<T>& a, const Cplx<T>& b) {
    T d = b.abs2();
    Cplx<T> n = a * b.conj();
    return {n.re / d, n.im / d};
}

}  // namespace hypo
