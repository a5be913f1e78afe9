// cocycle-kam: trigonometric-polynomial arithmetic on T^d and 2T^d with
// analytic-strip majorants, C^k norms, truncation and analytic smoothing of
// finitely differentiable data. Values are scalars or 2x2 matrices; matrix
// series double as group deviations (B = I + E) for the conjugation algebra.
#ifndef CKAM_FOURIER_HPP
#define CKAM_FOURIER_HPP

#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

#include "ckam/common.hpp"
#include "ckam/lie2.hpp"

namespace ckam {

using Mode = std::vector<int>;

inline int mode_abs(const Mode& n) {
  int s = 0;
  for (int x : n) s += std::abs(x);
  return s;
}

enum class ValueKind { RealScalar, ComplexScalar, RealMat2, ComplexMat2, Sl2R, Su11 };

inline bool kind_is_scalar(ValueKind k) {
  return k == ValueKind::RealScalar || k == ValueKind::ComplexScalar;
}
inline bool kind_is_real(ValueKind k) {
  return k == ValueKind::RealScalar || k == ValueKind::RealMat2 || k == ValueKind::Sl2R;
}
inline const char* kind_name(ValueKind k) {
  switch (k) {
    case ValueKind::RealScalar: return "real";
    case ValueKind::ComplexScalar: return "complex";
    case ValueKind::RealMat2: return "mat2r";
    case ValueKind::ComplexMat2: return "mat2c";
    case ValueKind::Sl2R: return "sl2r";
    case ValueKind::Su11: return "su11";
  }
  return "?";
}
inline ValueKind kind_from_name(const std::string& s) {
  if (s == "real") return ValueKind::RealScalar;
  if (s == "complex") return ValueKind::ComplexScalar;
  if (s == "mat2r") return ValueKind::RealMat2;
  if (s == "mat2c") return ValueKind::ComplexMat2;
  if (s == "sl2r") return ValueKind::Sl2R;
  if (s == "su11") return ValueKind::Su11;
  throw NumericError("unknown series kind: " + s);
}

// Support/pruning policy for series products. dropped (if set) accumulates
// the r=0 majorant mass of everything discarded.
struct SupportPolicy {
  double max_abs_mode = std::numeric_limits<double>::infinity();  // in effective units
  double prune_abs = 0.0;
  double* dropped = nullptr;
};

class FourierSeries {
 public:
  int dim = 1;
  bool doubled = false;  // keys live on the doubled lattice (frequency = n/2)
  ValueKind kind = ValueKind::ComplexMat2;
  std::map<Mode, Mat2> coeffs;

  FourierSeries() = default;
  FourierSeries(int d, bool dbl, ValueKind k) : dim(d), doubled(dbl), kind(k) {}

  static FourierSeries zero(int d, ValueKind k, bool dbl = false) {
    return FourierSeries(d, dbl, k);
  }
  static FourierSeries constant(int d, const Mat2& v, ValueKind k, bool dbl = false) {
    FourierSeries f(d, dbl, k);
    f.set(Mode(d, 0), v);
    return f;
  }

  int period_factor() const { return doubled ? 2 : 1; }
  double mode_abs_eff(const Mode& n) const {
    return static_cast<double>(mode_abs(n)) / period_factor();
  }

  double coeff_norm(const Mat2& v) const {
    return kind_is_scalar(kind) ? std::abs(v.a) : op_norm(v);
  }

  void set(Mode n, const Mat2& v) {
    if (static_cast<int>(n.size()) != dim) throw NumericError("FourierSeries::set: bad mode dim");
    coeffs[std::move(n)] = v;
  }
  void add_to(const Mode& n, const Mat2& v) {
    auto it = coeffs.find(n);
    if (it == coeffs.end()) coeffs.emplace(n, v);
    else it->second += v;
  }
  Mat2 coeff(const Mode& n) const {
    auto it = coeffs.find(n);
    return it == coeffs.end() ? Mat2::zero() : it->second;
  }
  Mat2 mean() const { return coeff(Mode(dim, 0)); }
  bool empty() const { return coeffs.empty(); }
  std::size_t support_size() const { return coeffs.size(); }
  double support_radius() const {
    double r = 0;
    for (const auto& [n, v] : coeffs) r = std::max(r, mode_abs_eff(n));
    return r;
  }

  // --- evaluation ------------------------------------------------------

  Mat2 eval(const std::vector<double>& theta) const {
    if (static_cast<int>(theta.size()) != dim) throw NumericError("eval: dimension mismatch");
    for (double t : theta)
      if (!std::isfinite(t)) throw NumericError("eval: non-finite point");
    Mat2 acc;
    double pf = period_factor();
    for (const auto& [n, v] : coeffs) {
      double phase = 0;
      for (int i = 0; i < dim; ++i) phase += n[i] * theta[i];
      acc += std::polar(1.0, phase / pf) * v;
    }
    return acc;
  }
  // scalar convenience
  Complex eval_scalar(const std::vector<double>& theta) const { return eval(theta).a; }

  // --- norms ------------------------------------------------------------

  // Weighted l1 majorant sum_n ||f_hat(n)|| e^{|n| r}; upper-bounds the strip
  // sup |f|_r and is the computable norm used throughout.
  double analytic_norm(double r) const {
    if (!(r >= 0) || !std::isfinite(r)) throw NumericError("analytic_norm: need finite r >= 0");
    double s = 0;
    for (const auto& [n, v] : coeffs) s += coeff_norm(v) * std::exp(mode_abs_eff(n) * r);
    return s;
  }
  double majorant0() const {  // analytic_norm(0), cheap form
    double s = 0;
    for (const auto& [n, v] : coeffs) s += coeff_norm(v);
    return s;
  }

  double c0_norm(int grid_size = 0) const {
    if (grid_size <= 0) grid_size = default_grid();
    double sup = 0;
    for_grid(grid_size, [&](const std::vector<double>& th) {
      sup = std::max(sup, coeff_norm(eval(th)));
    });
    return sup;
  }

  // sup over the grid of all partial derivatives of total order <= k.
  double ck_norm(int k, int grid_size = 0) const {
    if (k < 0) throw NumericError("ck_norm: k >= 0 required");
    if (grid_size <= 0) grid_size = default_grid();
    int need = 4 * static_cast<int>(std::ceil(support_radius()));
    if (grid_size < need)
      throw NumericError("ck_norm: grid too coarse for support (need >= 4*max|n|)");
    double sup = 0;
    std::vector<int> kp(dim, 0);
    ck_norm_rec(k, 0, kp, grid_size, sup);
    return sup;
  }

  // --- structural operations ---------------------------------------------

  FourierSeries truncate(double N) const {
    if (!(N > 0)) throw NumericError("truncate: N > 0 required");
    FourierSeries out(dim, doubled, kind);
    for (const auto& [n, v] : coeffs)
      if (mode_abs_eff(n) <= N) out.coeffs.emplace(n, v);
    return out;
  }
  FourierSeries remainder(double N) const {
    if (!(N > 0)) throw NumericError("remainder: N > 0 required");
    FourierSeries out(dim, doubled, kind);
    for (const auto& [n, v] : coeffs)
      if (mode_abs_eff(n) > N) out.coeffs.emplace(n, v);
    return out;
  }

  FourierSeries to_doubled() const {
    if (doubled) return *this;
    FourierSeries out(dim, true, kind);
    for (const auto& [n, v] : coeffs) {
      Mode m = n;
      for (int& x : m) x *= 2;
      out.coeffs.emplace(std::move(m), v);
    }
    return out;
  }
  // Requires all odd (half-integer) modes to vanish.
  FourierSeries to_single(double tol = 1e-12) const {
    if (!doubled) return *this;
    FourierSeries out(dim, false, kind);
    for (const auto& [n, v] : coeffs) {
      bool odd = false;
      for (int x : n)
        if (x % 2 != 0) { odd = true; break; }
      if (odd) {
        if (coeff_norm(v) > tol)
          throw NumericError("to_single: non-vanishing half-integer mode");
        continue;
      }
      Mode m = n;
      for (int& x : m) x /= 2;
      out.coeffs.emplace(std::move(m), v);
    }
    return out;
  }

  FourierSeries derivative(int axis) const {
    if (axis < 0 || axis >= dim) throw NumericError("derivative: bad axis");
    FourierSeries out(dim, doubled, kind == ValueKind::RealScalar ? ValueKind::ComplexScalar
                                                                  : kind);
    double pf = period_factor();
    for (const auto& [n, v] : coeffs) {
      if (n[axis] == 0) continue;
      out.coeffs.emplace(n, Complex(0, n[axis] / pf) * v);
    }
    return out;
  }

  // f(theta + alpha): coefficient n picks up e^{i<n, alpha>}.
  FourierSeries shifted(const std::vector<double>& alpha) const {
    if (static_cast<int>(alpha.size()) != dim) throw NumericError("shifted: bad alpha dim");
    FourierSeries out(dim, doubled, kind == ValueKind::RealScalar ? kind : kind);
    double pf = period_factor();
    for (const auto& [n, v] : coeffs) {
      double phase = 0;
      for (int i = 0; i < dim; ++i) phase += n[i] * alpha[i];
      out.coeffs.emplace(n, std::polar(1.0, phase / pf) * v);
    }
    return out;
  }

  // Coefficient-wise adjugate: for an SL(2)-valued map this is the inverse.
  FourierSeries adj_series() const {
    FourierSeries out(dim, doubled, kind);
    for (const auto& [n, v] : coeffs) out.coeffs.emplace(n, v.adj());
    return out;
  }

  FourierSeries scaled(Complex s) const {
    FourierSeries out(dim, doubled,
                      (s.imag() == 0.0) ? kind
                      : kind_is_scalar(kind) ? ValueKind::ComplexScalar
                                             : ValueKind::ComplexMat2);
    for (const auto& [n, v] : coeffs) out.coeffs.emplace(n, s * v);
    return out;
  }

  void prune(double abs_tol, double* dropped = nullptr) {
    for (auto it = coeffs.begin(); it != coeffs.end();) {
      double m = coeff_norm(it->second);
      if (m < abs_tol) {
        if (dropped) *dropped += m;
        it = coeffs.erase(it);
      } else {
        ++it;
      }
    }
  }

  int default_grid() const {
    int need = 4 * static_cast<int>(std::ceil(support_radius()));
    return std::max(64, need);
  }

  // Applies fn at every grid point (grid^dim points, dim capped small).
  void for_grid(int grid, const std::function<void(const std::vector<double>&)>& fn) const {
    std::vector<double> th(dim, 0.0);
    double period = doubled ? 2 * kTwoPi : kTwoPi;
    for_grid_rec(0, grid, period, th, fn);
  }

 private:
  void for_grid_rec(int axis, int grid, double period, std::vector<double>& th,
                    const std::function<void(const std::vector<double>&)>& fn) const {
    if (axis == dim) { fn(th); return; }
    for (int i = 0; i < grid; ++i) {
      th[axis] = period * i / grid;
      for_grid_rec(axis + 1, grid, period, th, fn);
    }
  }
  void ck_norm_rec(int budget, int axis, std::vector<int>& kp, int grid, double& sup) const {
    // evaluate the derivative prescribed by kp, then recurse on remaining order
    FourierSeries g = *this;
    for (int ax = 0; ax < dim; ++ax)
      for (int rep = 0; rep < kp[ax]; ++rep) g = g.derivative(ax);
    double s = g.c0_norm(grid);
    sup = std::max(sup, s);
    if (budget == 0) return;
    for (int ax = axis; ax < dim; ++ax) {
      kp[ax] += 1;
      ck_norm_rec(budget - 1, ax, kp, grid, sup);
      kp[ax] -= 1;
    }
  }
};

// --- arithmetic -----------------------------------------------------------

namespace detail {
inline ValueKind kind_join_add(ValueKind a, ValueKind b) {
  if (a == b) return a;
  if (kind_is_scalar(a) && kind_is_scalar(b)) return ValueKind::ComplexScalar;
  if (kind_is_scalar(a) || kind_is_scalar(b))
    throw NumericError("series add: scalar/matrix kind mismatch");
  if (kind_is_real(a) && kind_is_real(b)) return ValueKind::RealMat2;
  if ((a == ValueKind::Su11 && b == ValueKind::ComplexMat2) ||
      (b == ValueKind::Su11 && a == ValueKind::ComplexMat2))
    return ValueKind::ComplexMat2;
  return ValueKind::ComplexMat2;
}
inline ValueKind kind_join_mul(ValueKind a, ValueKind b) {
  if (kind_is_scalar(a) && kind_is_scalar(b))
    return (kind_is_real(a) && kind_is_real(b)) ? ValueKind::RealScalar
                                                : ValueKind::ComplexScalar;
  if (kind_is_scalar(a) || kind_is_scalar(b))
    throw NumericError("series mul: scalar/matrix kind mismatch");
  return (kind_is_real(a) && kind_is_real(b)) ? ValueKind::RealMat2 : ValueKind::ComplexMat2;
}
inline void match_domains(FourierSeries& a, FourierSeries& b) {
  if (a.dim != b.dim) throw NumericError("series op: dimension mismatch");
  if (a.doubled != b.doubled) {
    if (!a.doubled) a = a.to_doubled();
    if (!b.doubled) b = b.to_doubled();
  }
}
}  // namespace detail

inline FourierSeries add(FourierSeries a, FourierSeries b) {
  detail::match_domains(a, b);
  FourierSeries out(a.dim, a.doubled, detail::kind_join_add(a.kind, b.kind));
  out.coeffs = std::move(a.coeffs);
  for (const auto& [n, v] : b.coeffs) out.add_to(n, v);
  return out;
}
inline FourierSeries sub(const FourierSeries& a, const FourierSeries& b) {
  return add(a, b.scaled(-1.0));
}

inline FourierSeries mul(FourierSeries a, FourierSeries b, const SupportPolicy& pol = {}) {
  detail::match_domains(a, b);
  FourierSeries out(a.dim, a.doubled, detail::kind_join_mul(a.kind, b.kind));
  for (const auto& [n1, v1] : a.coeffs) {
    for (const auto& [n2, v2] : b.coeffs) {
      Mode n(a.dim);
      for (int i = 0; i < a.dim; ++i) n[i] = n1[i] + n2[i];
      Mat2 v = v1 * v2;
      if (out.mode_abs_eff(n) > pol.max_abs_mode) {
        if (pol.dropped) *pol.dropped += out.coeff_norm(v);
        continue;
      }
      out.add_to(n, v);
    }
  }
  if (pol.prune_abs > 0) out.prune(pol.prune_abs, pol.dropped);
  return out;
}

inline FourierSeries mul_const_left(const Mat2& c, const FourierSeries& f) {
  FourierSeries out(f.dim, f.doubled,
                    c.max_imag() == 0 && kind_is_real(f.kind) ? ValueKind::RealMat2
                                                              : ValueKind::ComplexMat2);
  if (kind_is_scalar(f.kind)) throw NumericError("mul_const_left: matrix series required");
  for (const auto& [n, v] : f.coeffs) out.coeffs.emplace(n, c * v);
  return out;
}
inline FourierSeries mul_const_right(const FourierSeries& f, const Mat2& c) {
  FourierSeries out(f.dim, f.doubled,
                    c.max_imag() == 0 && kind_is_real(f.kind) ? ValueKind::RealMat2
                                                              : ValueKind::ComplexMat2);
  if (kind_is_scalar(f.kind)) throw NumericError("mul_const_right: matrix series required");
  for (const auto& [n, v] : f.coeffs) out.coeffs.emplace(n, v * c);
  return out;
}
// C f C^{-1} coefficient-wise.
inline FourierSeries conj_by_const(const Mat2& c, const FourierSeries& f) {
  return mul_const_right(mul_const_left(c, f), c.inverse());
}

// --- deviation-space exp / log / products ---------------------------------
//
// Group elements near the identity are carried as deviations E with
// B = I + E. Keeping the unit part implicit preserves absolute precision of
// very small perturbations through long product chains.

inline FourierSeries dev_mul(const FourierSeries& e1, const FourierSeries& e2,
                             const SupportPolicy& pol = {}) {
  return add(add(e1, e2), mul(e1, e2, pol));
}

// Deviation of exp(Y): sum_{k>=1} Y^k / k!.
inline FourierSeries series_exp_dev(const FourierSeries& y, const SupportPolicy& pol = {}) {
  double m0 = y.majorant0();
  if (m0 > 30) throw NumericError("series_exp_dev: argument too large");
  FourierSeries acc = y;
  FourierSeries term = y;
  for (int k = 2; k <= 64; ++k) {
    term = mul(term, y, pol);
    term = term.scaled(1.0 / k);
    double tn = term.majorant0();
    acc = add(acc, term);
    if (tn <= 1e-300 || tn <= 1e-17 * std::max(1e-300, acc.majorant0())) break;
  }
  return acc;
}

// log(I + E) = sum_{k>=1} (-1)^{k+1} E^k / k. Needs majorant(E) < 1.
inline FourierSeries series_log_dev(const FourierSeries& e, const SupportPolicy& pol = {}) {
  double q = e.majorant0();
  if (q >= 0.9)
    throw NumericError("series_log_dev: majorant >= 0.9, outside safe convergence domain");
  FourierSeries acc = e;
  FourierSeries pw = e;
  for (int k = 2; k <= 120; ++k) {
    pw = mul(pw, e, pol);
    FourierSeries term = pw.scaled((k % 2 == 0 ? -1.0 : 1.0) / k);
    double tn = term.majorant0();
    acc = add(acc, term);
    if (tn <= 1e-300 || tn <= 1e-17 * std::max(1e-300, acc.majorant0())) break;
  }
  return acc;
}

// --- analytic smoothing -----------------------------------------------------
//
// Band-limited approximant of C^k data: truncation at K(j) = ceil(j ln(j+1) s)
// with a flat-top raised-cosine damping window (identity on |n| <= K/2, smooth
// rolloff to K). The window does not depend on k.
inline double mollify_window(double t) {
  if (t <= 0.5) return 1.0;
  if (t >= 1.0) return 0.0;
  return 0.5 * (1.0 + std::cos(kPi * (2.0 * t - 1.0)));
}

inline FourierSeries mollify(const FourierSeries& f, int j, int /*k*/ = 0) {
  if (j < 1) throw NumericError("mollify: j >= 1 required");
  if (!kind_is_real(f.kind) && f.kind != ValueKind::Su11)
    throw NumericError("mollify: real- or algebra-tagged series required");
  double sf = std::max(1.0, f.support_radius());
  double K = std::ceil(j * std::log(j + 1.0) * sf);
  FourierSeries out(f.dim, f.doubled, f.kind);
  for (const auto& [n, v] : f.coeffs) {
    double w = mollify_window(f.mode_abs_eff(n) / K);
    if (w == 0.0) continue;
    out.coeffs.emplace(n, w * v);
  }
  return out;
}

// --- su(1,1)-valued construction helpers -----------------------------------
//
// For an su(1,1)-valued map [[i t(th), v(th)], [conj(v(th)), -i t(th)]] the
// coefficient table couples n and -n: t_hat(-n) = conj(t_hat(n)) and the
// (2,1) coefficient at -n is conj(v_hat(n)).

inline void add_su11_tmode(FourierSeries& f, const Mode& n, Complex t_hat) {
  Mat2 up{Complex(0, 1) * t_hat, 0, 0, Complex(0, -1) * t_hat};
  f.add_to(n, up);
  bool zero = true;
  for (int x : n) zero = zero && x == 0;
  if (!zero) {
    Mode m = n;
    for (int& x : m) x = -x;
    Complex tc = std::conj(t_hat);
    f.add_to(m, Mat2{Complex(0, 1) * tc, 0, 0, Complex(0, -1) * tc});
  }
}

inline void add_su11_vmode(FourierSeries& f, const Mode& n, Complex v_hat) {
  f.add_to(n, Mat2{0, v_hat, 0, 0});
  Mode m = n;
  for (int& x : m) x = -x;
  f.add_to(m, Mat2{0, 0, std::conj(v_hat), 0});
}

// Extracts (t_hat(n), v_hat(n)) of an su(1,1)-valued series.
inline Complex su11_t_hat(const FourierSeries& f, const Mode& n) {
  return f.coeff(n).a / Complex(0, 1);
}
inline Complex su11_v_hat(const FourierSeries& f, const Mode& n) { return f.coeff(n).b; }

// --- reports ---------------------------------------------------------------

struct NormReport {
  double analytic_majorant_at_r = 0;
  double c0_norm = 0;
  double ck_norm = 0;
};

inline NormReport norm_report(const FourierSeries& f, double r, int k, int grid = 0) {
  NormReport rep;
  rep.analytic_majorant_at_r = f.analytic_norm(r);
  rep.c0_norm = f.c0_norm(grid);
  rep.ck_norm = f.ck_norm(k, grid);
  return rep;
}

// Sample-based structural checks (cheap validators, not proofs).
inline bool su11_valued(const FourierSeries& f, int samples = 32, double tol = 1e-10) {
  SplitMix64 rng(0x5u);
  double period = f.doubled ? 2 * kTwoPi : kTwoPi;
  for (int i = 0; i < samples; ++i) {
    std::vector<double> th(f.dim);
    for (double& t : th) t = rng.uniform(0.0, period);
    if (!is_su11_alg(f.eval(th), tol * (1.0 + f.majorant0()))) return false;
  }
  return true;
}
inline bool real_valued(const FourierSeries& f, int samples = 32, double tol = 1e-10) {
  SplitMix64 rng(0x7u);
  double period = f.doubled ? 2 * kTwoPi : kTwoPi;
  for (int i = 0; i < samples; ++i) {
    std::vector<double> th(f.dim);
    for (double& t : th) t = rng.uniform(0.0, period);
    if (f.eval(th).max_imag() > tol * (1.0 + f.majorant0())) return false;
  }
  return true;
}

}  // namespace ckam

#endif  // CKAM_FOURIER_HPP
