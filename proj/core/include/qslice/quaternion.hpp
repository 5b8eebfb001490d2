#ifndef QSLICE_QUATERNION_HPP
#define QSLICE_QUATERNION_HPP

#include <cmath>
#include <utility>

#include "qslice/errors.hpp"
#include "qslice/rational.hpp"

namespace qslice {

/// Element of H with components along 1, i, j, k. The scalar type is
/// either Rational (symbolic layer) or double (evaluation layer).
template <typename S>
struct Quat {
    S w{}, x{}, y{}, z{};

    Quat() = default;
    Quat(S w_, S x_, S y_, S z_)
        : w(std::move(w_)), x(std::move(x_)), y(std::move(y_)), z(std::move(z_)) {}

    static Quat real(S value) { return Quat(std::move(value), S(0), S(0), S(0)); }
    static Quat zero() { return Quat(); }
    static Quat one() { return real(S(1)); }
    static Quat unit_i() { return Quat(S(0), S(1), S(0), S(0)); }
    static Quat unit_j() { return Quat(S(0), S(0), S(1), S(0)); }
    static Quat unit_k() { return Quat(S(0), S(0), S(0), S(1)); }

    bool is_zero() const { return w == S(0) && x == S(0) && y == S(0) && z == S(0); }

    friend bool operator==(const Quat& a, const Quat& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
    friend bool operator!=(const Quat& a, const Quat& b) { return !(a == b); }
};

template <typename S>
Quat<S> operator+(const Quat<S>& a, const Quat<S>& b) {
    return Quat<S>(S(a.w + b.w), S(a.x + b.x), S(a.y + b.y), S(a.z + b.z));
}

template <typename S>
Quat<S> operator-(const Quat<S>& a, const Quat<S>& b) {
    return Quat<S>(S(a.w - b.w), S(a.x - b.x), S(a.y - b.y), S(a.z - b.z));
}

template <typename S>
Quat<S> operator-(const Quat<S>& a) {
    return Quat<S>(S(-a.w), S(-a.x), S(-a.y), S(-a.z));
}

// Hamilton product: i^2 = j^2 = k^2 = -1, ij = k, jk = i, ki = j.
template <typename S>
Quat<S> operator*(const Quat<S>& a, const Quat<S>& b) {
    return Quat<S>(S(a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z),
                   S(a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y),
                   S(a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x),
                   S(a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w));
}

template <typename S>
Quat<S> operator*(const Quat<S>& a, const S& s) {
    return Quat<S>(S(a.w * s), S(a.x * s), S(a.y * s), S(a.z * s));
}

template <typename S>
Quat<S> operator*(const S& s, const Quat<S>& a) {
    return a * s;  // scalars are central
}

template <typename S>
Quat<S> conj(const Quat<S>& a) {
    return Quat<S>(a.w, S(-a.x), S(-a.y), S(-a.z));
}

template <typename S>
S norm_sq(const Quat<S>& a) {
    return S(a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z);
}

template <typename S>
Quat<S> inverse(const Quat<S>& a) {
    if (a.is_zero()) throw ZeroDivisor("quaternion inverse of zero");
    S n = norm_sq(a);
    return Quat<S>(S(a.w / n), S(-a.x / n), S(-a.y / n), S(-a.z / n));
}

using RQuat = Quat<Rational>;
using DQuat = Quat<double>;

inline DQuat to_double(const RQuat& q) {
    return DQuat(to_double(q.w), to_double(q.x), to_double(q.y), to_double(q.z));
}

inline double norm(const DQuat& q) { return std::sqrt(norm_sq(q)); }

inline DQuat imag_part(const DQuat& q) { return DQuat(0.0, q.x, q.y, q.z); }

/// x = alpha + unit * beta with beta = |Im(x)| >= 0. The unit is
/// Im(x)/|Im(x)| when beta > 0 and defaults to i on the real axis;
/// consumers must be insensitive to that default (tested downstream).
struct ImaginaryDecomposition {
    double alpha = 0.0;
    double beta = 0.0;
    DQuat unit = DQuat::unit_i();
};

inline ImaginaryDecomposition decompose(const DQuat& q) {
    ImaginaryDecomposition d;
    d.alpha = q.w;
    d.beta = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (d.beta > 0.0) {
        d.unit = DQuat(0.0, q.x / d.beta, q.y / d.beta, q.z / d.beta);
    }
    return d;
}

inline DQuat reconstruct(const ImaginaryDecomposition& d) {
    return DQuat::real(d.alpha) + d.unit * d.beta;
}

/// true iff q is a pure imaginary unit (q^2 = -1) within tol.
inline bool is_imaginary_unit(const DQuat& q, double tol = 1e-12) {
    return std::abs(q.w) <= tol && std::abs(norm_sq(q) - 1.0) <= tol;
}

inline bool is_imaginary_unit(const RQuat& q) {
    return q.w == 0 && norm_sq(q) == 1;
}

}  // namespace qslice

#endif
