// cocycle-kam: 2x2 matrix groups/algebras. SL(2,R), SU(1,1), sl(2,R), su(1,1),
// closed-form exp/log, the Cayley-type conjugation between the real and the
// unit-disk frames, spectral classification, elliptic diagonalization and a
// 2x2 Schur form.
#ifndef CKAM_LIE2_HPP
#define CKAM_LIE2_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <optional>

#include "ckam/common.hpp"

namespace ckam {

// Row-major 2x2 complex matrix [[a, b], [c, d]].
struct Mat2 {
  Complex a{0, 0}, b{0, 0}, c{0, 0}, d{0, 0};

  static Mat2 identity() { return {1, 0, 0, 1}; }
  static Mat2 zero() { return {}; }
  static Mat2 diag(Complex x, Complex y) { return {x, 0, 0, y}; }
  // Rotation by phi in SL(2,R).
  static Mat2 rotation(double phi) {
    return {std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi)};
  }
  // Generator of rotation: exp2(rot_gen(phi)) == rotation(phi).
  static Mat2 rot_gen(double phi) { return {0, -phi, phi, 0}; }

  Complex trace() const { return a + d; }
  Complex det() const { return a * d - b * c; }

  Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
  Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  friend Mat2 operator*(Complex s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
  friend Mat2 operator*(double s, const Mat2& m) { return Complex(s, 0) * m; }
  Mat2& operator+=(const Mat2& o) { a += o.a; b += o.b; c += o.c; d += o.d; return *this; }

  // Adjugate; equals the inverse when det == 1.
  Mat2 adj() const { return {d, -b, -c, a}; }
  Mat2 inverse() const {
    Complex dt = det();
    if (std::abs(dt) < 1e-300) throw NumericError("Mat2::inverse: singular");
    return (1.0 / dt) * adj();
  }
  Mat2 conj_entries() const { return {std::conj(a), std::conj(b), std::conj(c), std::conj(d)}; }
  Mat2 hermitian() const { return {std::conj(a), std::conj(c), std::conj(b), std::conj(d)}; }

  double frob2() const { return std::norm(a) + std::norm(b) + std::norm(c) + std::norm(d); }
  double max_abs() const {
    return std::max(std::max(std::abs(a), std::abs(b)), std::max(std::abs(c), std::abs(d)));
  }
  double max_imag() const {
    return std::max(std::max(std::abs(a.imag()), std::abs(b.imag())),
                    std::max(std::abs(c.imag()), std::abs(d.imag())));
  }
  Mat2 real_part() const { return {a.real(), b.real(), c.real(), d.real()}; }
};

// Operator 2-norm via the closed-form singular values.
inline double op_norm(const Mat2& m) {
  double t = m.frob2();
  double dd = std::norm(m.det());  // product of squared singular values
  double disc = std::max(0.0, t * t - 4.0 * dd);
  return std::sqrt(0.5 * (t + std::sqrt(disc)));
}

inline double op_norm_inv(const Mat2& m) {  // smallest singular value
  double t = m.frob2();
  double dd = std::norm(m.det());
  double disc = std::max(0.0, t * t - 4.0 * dd);
  double s2 = 0.5 * (t - std::sqrt(disc));
  return std::sqrt(std::max(0.0, s2));
}

inline bool is_sl2r(const Mat2& m, double tol = 1e-12) {
  return m.max_imag() <= tol && std::abs(m.det() - 1.0) <= tol;
}
inline bool is_su11(const Mat2& m, double tol = 1e-12) {
  // [[a, b], [conj(b), conj(a)]] with |a|^2 - |b|^2 = 1.
  return std::abs(m.d - std::conj(m.a)) <= tol && std::abs(m.c - std::conj(m.b)) <= tol &&
         std::abs(std::norm(m.a) - std::norm(m.b) - 1.0) <= tol;
}
inline bool is_traceless(const Mat2& m, double tol = 1e-12) { return std::abs(m.trace()) <= tol; }
inline bool is_sl2_alg(const Mat2& m, double tol = 1e-12) {
  return m.max_imag() <= tol && is_traceless(m, tol);
}
inline bool is_su11_alg(const Mat2& m, double tol = 1e-12) {
  // [[it, v], [conj(v), -it]], t real.
  return std::abs(m.a.real()) <= tol && std::abs(m.d + m.a) <= tol &&
         std::abs(m.c - std::conj(m.b)) <= tol;
}

// Conjugation between sl(2,R) and su(1,1): X -> M X M^{-1} with
// M = (1/(1+i)) [[1, -i], [1, i]].
namespace detail {
inline const Mat2& cayley_m() {
  static const Mat2 m = (1.0 / Complex(1, 1)) * Mat2{1, Complex(0, -1), 1, Complex(0, 1)};
  return m;
}
inline const Mat2& cayley_m_inv() {
  static const Mat2 m = (1.0 / Complex(1, 1)) * Mat2{Complex(0, 1), Complex(0, 1), -1, 1};
  return m;
}
}  // namespace detail

inline Mat2 to_su11_frame(const Mat2& x) { return detail::cayley_m() * x * detail::cayley_m_inv(); }
inline Mat2 to_sl2_frame(const Mat2& y) { return detail::cayley_m_inv() * y * detail::cayley_m(); }

// su(1,1) coordinates of [[it, v], [conj(v), -it]].
struct Su11Coords {
  double t;
  Complex v;
};
inline Su11Coords su11_coords(const Mat2& y) { return {y.a.imag(), y.b}; }
inline Mat2 su11_from_coords(double t, Complex v) {
  return {Complex(0, t), v, std::conj(v), Complex(0, -t)};
}

namespace detail {
// sinh(w)/w, stable near 0.
inline Complex sinhc(Complex w) {
  if (std::abs(w) < 1e-4) {
    Complex w2 = w * w;
    return 1.0 + w2 / 6.0 + w2 * w2 / 120.0 + w2 * w2 * w2 / 5040.0;
  }
  return std::sinh(w) / w;
}
// w/sinh(w), stable near 0 (even function of w).
inline Complex inv_sinhc(Complex w) {
  if (std::abs(w) < 1e-4) {
    Complex w2 = w * w;
    return 1.0 - w2 / 6.0 + 7.0 * w2 * w2 / 360.0;
  }
  return w / std::sinh(w);
}
// principal acosh on C: log(z + sqrt(z-1)sqrt(z+1)), Re >= 0.
inline Complex acosh_c(Complex z) {
  Complex w = std::log(z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0));
  if (w.real() < 0) w = -w;
  return w;
}
}  // namespace detail

// exp of a traceless 2x2 matrix, closed form: with w^2 = -det X,
// exp X = cosh(w) I + sinh(w)/w X.
inline Mat2 exp2(const Mat2& x) {
  Complex w2 = -x.det();
  Complex w = std::sqrt(w2);
  Complex ch = std::cosh(w);
  Complex sc = detail::sinhc(w);
  return {ch + sc * x.a, sc * x.b, sc * x.c, ch + sc * x.d};
}

// exp2(X) - I computed without forming the unit part (cancellation-safe for
// small X): (cosh(w)-1) I + sinhc(w) X.
inline Mat2 exp2_dev(const Mat2& x) {
  Complex w2 = -x.det();
  Complex w = std::sqrt(w2);
  Complex chm1;
  if (std::abs(w) < 1e-4) {
    chm1 = w2 / 2.0 + w2 * w2 / 24.0 + w2 * w2 * w2 / 720.0;
  } else {
    // cosh(w)-1 = 2 sinh^2(w/2)
    Complex s = std::sinh(w / 2.0);
    chm1 = 2.0 * s * s;
  }
  Complex sc = detail::sinhc(w);
  return {chm1 + sc * x.a, sc * x.b, sc * x.c, chm1 + sc * x.d};
}

// Principal traceless logarithm of A in SL(2,C). Rotation angle lands in
// (-pi, pi]. A = -I maps to the rotation generator of angle pi. Throws for
// trace == -2 with A != -I (no traceless logarithm).
inline Mat2 log2m(const Mat2& A) {
  Complex dt = A.det();
  if (std::abs(dt - 1.0) > 1e-9)
    throw NumericError("log2m: determinant not 1");
  Complex h = 0.5 * A.trace();
  Mat2 y = A - Mat2::diag(h, h);  // traceless part
  Complex w = detail::acosh_c(h);
  // cosh(w) = h; exp(Y * w/sinh w) reproduces A when sinh w != 0.
  double abs_sinh = std::abs(std::sinh(w));
  double ynorm = op_norm(y);
  if (abs_sinh < 1e-12) {
    // h near +1 or -1.
    if (std::abs(h - 1.0) < std::abs(h + 1.0)) {
      // parabolic at trace 2: log(I + Y) = Y exactly (Y nilpotent).
      return y;
    }
    if (ynorm < 1e-12) return Mat2::rot_gen(kPi);  // A = -I
    throw NumericError("log2m: trace = -2 with A != -I has no traceless log");
  }
  Complex f = detail::inv_sinhc(w);
  return f * y;
}

enum class SpectralClass { Elliptic, Hyperbolic, Parabolic };

// Eigenvalues e^{+-i rho} with rho in [0,pi] (elliptic), i t (trace > 2),
// pi + i t (trace < -2).
struct SpectralData {
  Complex rho;
  SpectralClass cls;
};

inline SpectralData spectral_data(const Mat2& A) {
  if (std::abs(A.det() - 1.0) > 1e-9) throw NumericError("spectral_data: det != 1");
  double h = 0.5 * A.trace().real();
  const double tol = 1e-12;
  if (std::abs(h) <= 1.0 - tol) {
    return {Complex(std::acos(h), 0), SpectralClass::Elliptic};
  }
  if (h > 1.0 + tol) {
    return {Complex(0, std::acosh(h)), SpectralClass::Hyperbolic};
  }
  if (h < -1.0 - tol) {
    return {Complex(kPi, std::acosh(-h)), SpectralClass::Hyperbolic};
  }
  return {Complex(h > 0 ? 0.0 : kPi, 0), SpectralClass::Parabolic};
}

// Signed rotation angle of an elliptic SU(1,1) matrix: the value rho with
// P A P^{-1} = diag(e^{i rho}, e^{-i rho}) reachable inside SU(1,1) (the
// eigenvector of e^{i rho} lies inside the cone |z1| > |z2|).
inline double su11_signed_rho(const Mat2& A) {
  double x = A.a.real();
  if (std::abs(x) >= 1.0) throw NumericError("su11_signed_rho: not elliptic");
  double rho = std::acos(x);
  return A.a.imag() >= 0 ? rho : -rho;
}

struct EllipticDiag {
  Mat2 P;          // SU(1,1), P A P^{-1} = diag(e^{i rho}, e^{-i rho})
  double rho;      // signed
  double p_norm;   // operator norm of P
};

// Hou-You style diagonalization inside SU(1,1). Requires |rho| > rho_floor.
inline EllipticDiag diagonalize_elliptic(const Mat2& A, double rho_floor = 1e-12) {
  if (!is_su11(A, 1e-9)) throw NumericError("diagonalize_elliptic: not SU(1,1)");
  double x = A.a.real();
  if (std::abs(x) >= 1.0 - 1e-15) throw NumericError("diagonalize_elliptic: not elliptic");
  double rho = su11_signed_rho(A);
  if (std::abs(rho) <= rho_floor)
    throw NumericError("diagonalize_elliptic: near-parabolic (|rho| below floor)");
  if (std::abs(A.b) < 1e-15 * (1.0 + op_norm(A))) {
    return {Mat2::identity(), rho, 1.0};
  }
  // Eigenvector of e^{i rho}: w = (b, e^{i rho} - a); inside-cone by the
  // choice of sign of rho.
  Complex ev = std::polar(1.0, rho);
  Complex w1 = A.b;
  Complex w2 = ev - A.a;
  double s2 = std::norm(w1) - std::norm(w2);
  if (s2 <= 0) throw NumericError("diagonalize_elliptic: eigenvector not inside cone");
  double s = std::sqrt(s2);
  // P^{-1} = [[w1, conj(w2)], [w2, conj(w1)]] / s; P = its adjugate (det 1).
  Mat2 pinv{w1 / s, std::conj(w2) / s, w2 / s, std::conj(w1) / s};
  Mat2 p = pinv.adj();
  return {p, rho, op_norm(p)};
}

struct SchurForm {
  Mat2 U;          // unitary, det = 1
  Mat2 T;          // [[e^gamma, c], [0, e^{-gamma}]]
  Complex gamma;
  Complex c;
};

// Unitary upper-triangularization U A U^{-1} = T. gamma follows the
// spectral_data convention (i rho).
inline SchurForm schur_upper(const Mat2& A) {
  if (std::abs(A.det() - 1.0) > 1e-9) throw NumericError("schur_upper: det != 1");
  SpectralData sd = spectral_data(A);
  Complex gamma = Complex(0, 1) * sd.rho;  // e^gamma = e^{i rho}
  Complex mu = std::exp(gamma);
  // Eigenvector of mu: rows of (A - mu I) give two candidates.
  Complex u1a = A.b, u2a = mu - A.a;
  Complex u1b = mu - A.d, u2b = A.c;
  double na = std::norm(u1a) + std::norm(u2a);
  double nb = std::norm(u1b) + std::norm(u2b);
  Complex u1, u2;
  if (na >= nb) { u1 = u1a; u2 = u2a; } else { u1 = u1b; u2 = u2b; }
  double n = std::sqrt(std::norm(u1) + std::norm(u2));
  if (n < 1e-300) { u1 = 1; u2 = 0; n = 1; }
  u1 /= n; u2 /= n;
  // Columns (u, u_perp) form a unitary with det 1; U = its inverse (= adjoint).
  Mat2 u0{u1, -std::conj(u2), u2, std::conj(u1)};
  Mat2 u = u0.hermitian();
  Mat2 t = u * A * u0;
  t.c = 0;  // clean roundoff below the diagonal
  return {u, t, gamma, t.b};
}

}  // namespace ckam

#endif  // CKAM_LIE2_HPP
