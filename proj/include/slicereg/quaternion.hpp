#pragma once

/**
 * @file quaternion.hpp
 * @brief Real quaternions, unit imaginaries and the slice structure of H.
 *
 * A quaternion q = x0 + x1 e1 + x2 e2 + x3 e3 multiplies with
 *   e1 e2 = -e2 e1 = e3,  e2 e3 = -e3 e2 = e1,  e3 e1 = -e1 e3 = e2,
 * and every unit imaginary I satisfies I^2 = -1, so each non-real q lies in
 * exactly one complex plane C(I_q) = { x + I_q y }.  Real quaternions lie in
 * all of them, which slice_decompose reports with an explicit flag.
 */

#include <array>
#include <cmath>
#include <complex>
#include <optional>
#include <ostream>
#include <string>

#include "slicereg/errors.hpp"

namespace slicereg {

/// Absolute tolerance for unit-length checks (imaginary units, rotors).
inline constexpr double kUnitTolerance = 1e-12;

template <typename T = double>
struct Quaternion {
  T x0{}, x1{}, x2{}, x3{};

  constexpr Quaternion() = default;
  // Implicit from a real scalar, like std::complex.
  constexpr Quaternion(T re) : x0{re} {}  // NOLINT(google-explicit-constructor)
  constexpr Quaternion(T a, T b, T c, T d) : x0{a}, x1{b}, x2{c}, x3{d} {}

  constexpr T real() const { return x0; }
  constexpr Quaternion vector_part() const { return {T{0}, x1, x2, x3}; }
  constexpr std::array<T, 4> components() const { return {x0, x1, x2, x3}; }

  constexpr bool operator==(const Quaternion&) const = default;

  constexpr Quaternion operator-() const { return {-x0, -x1, -x2, -x3}; }

  constexpr Quaternion& operator+=(const Quaternion& o) {
    x0 += o.x0; x1 += o.x1; x2 += o.x2; x3 += o.x3;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    x0 -= o.x0; x1 -= o.x1; x2 -= o.x2; x3 -= o.x3;
    return *this;
  }
  constexpr Quaternion& operator*=(T s) {
    x0 *= s; x1 *= s; x2 *= s; x3 *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(T s) {
    x0 /= s; x1 /= s; x2 /= s; x3 /= s;
    return *this;
  }

  friend constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
  friend constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
  friend constexpr Quaternion operator*(Quaternion a, T s) { return a *= s; }
  friend constexpr Quaternion operator*(T s, Quaternion a) { return a *= s; }
  friend constexpr Quaternion operator/(Quaternion a, T s) { return a /= s; }

  // Hamilton product (non-commutative).
  friend constexpr Quaternion operator*(const Quaternion& p, const Quaternion& q) {
    return {p.x0 * q.x0 - p.x1 * q.x1 - p.x2 * q.x2 - p.x3 * q.x3,
            p.x0 * q.x1 + p.x1 * q.x0 + p.x2 * q.x3 - p.x3 * q.x2,
            p.x0 * q.x2 - p.x1 * q.x3 + p.x2 * q.x0 + p.x3 * q.x1,
            p.x0 * q.x3 + p.x1 * q.x2 - p.x2 * q.x1 + p.x3 * q.x0};
  }

  friend std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
    return os << '(' << q.x0 << ", " << q.x1 << ", " << q.x2 << ", " << q.x3 << ')';
  }
};

using Quat = Quaternion<double>;

inline constexpr Quat kE1{0.0, 1.0, 0.0, 0.0};
inline constexpr Quat kE2{0.0, 0.0, 1.0, 0.0};
inline constexpr Quat kE3{0.0, 0.0, 0.0, 1.0};

template <typename T>
constexpr Quaternion<T> hamilton_mul(const Quaternion<T>& p, const Quaternion<T>& q) {
  return p * q;
}

template <typename T>
constexpr Quaternion<T> conjugate(const Quaternion<T>& q) {
  return {q.x0, -q.x1, -q.x2, -q.x3};
}

template <typename T>
constexpr T norm_squared(const Quaternion<T>& q) {
  return q.x0 * q.x0 + q.x1 * q.x1 + q.x2 * q.x2 + q.x3 * q.x3;
}

template <typename T>
T norm(const Quaternion<T>& q) {
  return std::sqrt(norm_squared(q));
}

/// Euclidean inner product of R^4.
template <typename T>
constexpr T dot(const Quaternion<T>& p, const Quaternion<T>& q) {
  return p.x0 * q.x0 + p.x1 * q.x1 + p.x2 * q.x2 + p.x3 * q.x3;
}

/// Multiplicative inverse; the caller guarantees q != 0.
template <typename T>
constexpr Quaternion<T> inverse(const Quaternion<T>& q) {
  return conjugate(q) / norm_squared(q);
}

template <typename T>
bool is_finite(const Quaternion<T>& q) {
  return std::isfinite(q.x0) && std::isfinite(q.x1) && std::isfinite(q.x2) &&
         std::isfinite(q.x3);
}

/// A point of the sphere S^2 of unit imaginary quaternions.
class ImaginaryUnit {
 public:
  /// Throws NotAUnitVector unless v1^2+v2^2+v3^2 = 1 within kUnitTolerance.
  ImaginaryUnit(double v1, double v2, double v3) : v_{0.0, v1, v2, v3} {
    if (!std::isfinite(v1) || !std::isfinite(v2) || !std::isfinite(v3) ||
        std::abs(norm(v_) - 1.0) > kUnitTolerance) {
      throw NotAUnitVector("imaginary unit must have norm 1, got " +
                           std::to_string(norm(v_)));
    }
  }

  /// Normalizes (v1, v2, v3); throws NotAUnitVector for the zero vector.
  static ImaginaryUnit normalized(double v1, double v2, double v3) {
    const double n = std::sqrt(v1 * v1 + v2 * v2 + v3 * v3);
    if (!(n > 0.0) || !std::isfinite(n)) {
      throw NotAUnitVector("cannot normalize a zero or non-finite vector");
    }
    return ImaginaryUnit(v1 / n, v2 / n, v3 / n, Unchecked{});
  }

  static ImaginaryUnit from_quaternion(const Quat& q) {
    return normalized(q.x1, q.x2, q.x3);
  }

  static ImaginaryUnit e1() { return {1.0, 0.0, 0.0}; }
  static ImaginaryUnit e2() { return {0.0, 1.0, 0.0}; }
  static ImaginaryUnit e3() { return {0.0, 0.0, 1.0}; }

  double v1() const { return v_.x1; }
  double v2() const { return v_.x2; }
  double v3() const { return v_.x3; }
  const Quat& as_quaternion() const { return v_; }
  operator const Quat&() const { return v_; }  // NOLINT(google-explicit-constructor)

  bool operator==(const ImaginaryUnit& o) const { return v_ == o.v_; }

 private:
  struct Unchecked {};
  ImaginaryUnit(double v1, double v2, double v3, Unchecked) : v_{0.0, v1, v2, v3} {}

  Quat v_;
};

/// Slice coordinates q = x + I y with y >= 0.  `unit` is empty for real q.
struct SliceCoordinates {
  double x = 0.0;
  double y = 0.0;
  std::optional<ImaginaryUnit> unit;

  bool is_real() const { return !unit.has_value(); }
};

inline SliceCoordinates slice_decompose(const Quat& q) {
  const double y = norm(q.vector_part());
  if (y == 0.0) return {q.x0, 0.0, std::nullopt};
  return {q.x0, y, ImaginaryUnit::normalized(q.x1 / y, q.x2 / y, q.x3 / y)};
}

/// The point x + i y of the slice C(i).
inline Quat in_slice(double x, double y, const ImaginaryUnit& i) {
  return {x, y * i.v1(), y * i.v2(), y * i.v3()};
}

inline Quat in_slice(std::complex<double> z, const ImaginaryUnit& i) {
  return in_slice(z.real(), z.imag(), i);
}

/// Complex coordinate of q in C(i): (real part, component along i).
/// Exact for q in C(i); for other q it is the orthogonal projection.
inline std::complex<double> slice_coordinate(const Quat& q, const ImaginaryUnit& i) {
  return {q.x0, q.x1 * i.v1() + q.x2 * i.v2() + q.x3 * i.v3()};
}

/// T_r(q) = r q conj(r) for a unit quaternion r.
inline Quat rotate(const Quat& r, const Quat& q) {
  if (std::abs(norm(r) - 1.0) > kUnitTolerance) {
    throw NonUnitRotor("rotor norm deviates from 1 by " +
                       std::to_string(std::abs(norm(r) - 1.0)));
  }
  return r * q * conjugate(r);
}

inline ImaginaryUnit rotate(const Quat& r, const ImaginaryUnit& i) {
  return ImaginaryUnit::from_quaternion(rotate(r, i.as_quaternion()));
}

/// Deterministic unit j with <i, j> = 0: Gram-Schmidt of the first standard
/// basis vector e_k whose component |i_k| is at most 0.9.  At most one
/// component of a unit vector exceeds 1/sqrt(2), so a candidate always exists.
inline ImaginaryUnit orthogonal_unit(const ImaginaryUnit& i) {
  const std::array<double, 3> v{i.v1(), i.v2(), i.v3()};
  for (std::size_t k = 0; k < 3; ++k) {
    if (std::abs(v[k]) > 0.9) continue;
    std::array<double, 3> w{0.0, 0.0, 0.0};
    w[k] = 1.0;
    for (std::size_t m = 0; m < 3; ++m) w[m] -= v[k] * v[m];
    return ImaginaryUnit::normalized(w[0], w[1], w[2]);
  }
  throw NotAUnitVector("orthogonal_unit: no admissible basis vector");  // unreachable
}

/// Unit quaternion u with u i conj(u) = k.
inline Quat rotor_between(const ImaginaryUnit& i, const ImaginaryUnit& k) {
  Quat u = Quat{1.0} - k.as_quaternion() * i.as_quaternion();
  const double n = norm(u);
  if (n < 1e-8) return orthogonal_unit(i).as_quaternion();  // k = -i: half turn
  return u / n;
}

/// a + sign * i a i.  On C(i), a - i a i = 2 a_1 and a + i a i = 2 a_2 j.
inline Quat i_sandwich(const Quat& a, const ImaginaryUnit& i, int sign) {
  const Quat& u = i.as_quaternion();
  const Quat t = u * a * u;
  return sign >= 0 ? a + t : a - t;
}

}  // namespace slicereg
