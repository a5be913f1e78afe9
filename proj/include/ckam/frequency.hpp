// cocycle-kam: frequency arithmetic. Continued fractions for d = 1, the
// torus metric, and empirically fitted Diophantine constants (kappa, tau)
// valid up to a cutoff N_max.
#ifndef CKAM_FREQUENCY_HPP
#define CKAM_FREQUENCY_HPP

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <utility>
#include <vector>

#include "ckam/common.hpp"

namespace ckam {

struct DioConstants {
  double kappa = 0;
  double tau = 1.5;
  long n_max = 10000;
};

struct ContinuedFraction {
  std::vector<long long> quotients;
  bool rational_flag = false;  // a partial quotient exploded (> 1e12)
};

// Standard continued-fraction expansion of x in (0,1)-ish scale.
inline ContinuedFraction continued_fraction_of(double x, int depth) {
  if (depth > 40) throw NumericError("continued_fraction: depth <= 40");
  ContinuedFraction cf;
  double y = x;
  for (int i = 0; i < depth; ++i) {
    double fl = std::floor(y);
    if (fl > 1e12 || !std::isfinite(fl)) {
      cf.rational_flag = true;
      break;
    }
    cf.quotients.push_back(static_cast<long long>(fl));
    double frac = y - fl;
    if (frac < 1e-15) {
      cf.rational_flag = true;
      break;
    }
    y = 1.0 / frac;
  }
  return cf;
}

// Expansion of alpha/(2pi) for a frequency alpha on T = R/2piZ.
inline ContinuedFraction continued_fraction(double alpha_radians, int depth) {
  return continued_fraction_of(alpha_radians / kTwoPi, depth);
}

// Convergents p_k/q_k of a continued fraction.
inline std::vector<std::pair<long long, long long>> convergents(const ContinuedFraction& cf) {
  std::vector<std::pair<long long, long long>> out;
  long long p0 = 1, q0 = 0, p1 = cf.quotients.empty() ? 0 : cf.quotients[0], q1 = 1;
  if (!cf.quotients.empty()) out.emplace_back(p1, q1);
  for (std::size_t i = 1; i < cf.quotients.size(); ++i) {
    long long a = cf.quotients[i];
    long long p2 = a * p1 + p0, q2 = a * q1 + q0;
    out.emplace_back(p2, q2);
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    if (q2 > (1LL << 40)) break;
  }
  return out;
}

class Frequency {
 public:
  int dim = 1;
  std::vector<double> alpha;  // in [0, 2pi)^d
  std::optional<ContinuedFraction> cf;
  std::optional<DioConstants> dc;

  Frequency() = default;
  explicit Frequency(std::vector<double> a) : dim(static_cast<int>(a.size())), alpha(std::move(a)) {
    for (double& x : alpha) {
      x = std::fmod(x, kTwoPi);
      if (x < 0) x += kTwoPi;
    }
  }

  double pairing(const std::vector<int>& n) const {
    double s = 0;
    for (int i = 0; i < dim; ++i) s += n[i] * alpha[i];
    return s;
  }
  // <n, alpha> for the scalar index n when d = 1.
  double pairing1(long long n) const { return n * alpha[0]; }

  // Verifies min_{0<|n|<=N} |<n,alpha>|_T > 0 and, when dc is present, the
  // Diophantine inequality up to n_max. d >= 2 scans the l1-ball (cutoff
  // enforced by the caller supplying a modest n_max).
  void verify(long n_check) const {
    for_l1_ball(n_check, [&](const std::vector<int>& n) {
      double d = torus_distance(pairing(n));
      if (d <= 0)
        throw NumericError("Frequency: rationally dependent up to N_max");
      if (dc) {
        // roundoff guard: the fitted kappa attains equality at its argmin
        double bound = dc->kappa / std::pow(static_cast<double>(l1(n)), dc->tau);
        if (d < bound * (1.0 - 1e-12))
          throw NumericError("Frequency: DC(kappa,tau) fails inside N_max");
      }
    });
  }

  template <class Fn>
  void for_l1_ball(long N, Fn&& fn) const {
    std::vector<int> n(dim, 0);
    for_l1_rec(0, static_cast<int>(N), n, fn);
  }

 private:
  static int l1(const std::vector<int>& n) {
    int s = 0;
    for (int x : n) s += std::abs(x);
    return s;
  }
  template <class Fn>
  void for_l1_rec(int axis, int budget, std::vector<int>& n, Fn&& fn) const {
    if (axis == dim) {
      if (l1(n) > 0) fn(n);
      return;
    }
    for (int v = -budget; v <= budget; ++v) {
      n[axis] = v;
      for_l1_rec(axis + 1, budget - std::abs(v), n, fn);
    }
    n[axis] = 0;
  }
};

// kappa = min_{0<|n|<=N_max} |n|^tau * |<n,alpha>|_T. Zero (underflow) flags
// an effectively rational/Liouville input at this scale.
inline double fit_dc_constants(const Frequency& freq, double tau, long n_max) {
  if (!(tau > freq.dim)) throw NumericError("fit_dc_constants: tau > d required");
  double kappa = std::numeric_limits<double>::infinity();
  freq.for_l1_ball(n_max, [&](const std::vector<int>& n) {
    int a = 0;
    for (int x : n) a += std::abs(x);
    double d = torus_distance(freq.pairing(n));
    kappa = std::min(kappa, std::pow(static_cast<double>(a), tau) * d);
  });
  if (!(kappa > 1e-14))
    throw NumericError("fit_dc_constants: kappa underflow (effectively Liouville at this scale)");
  return kappa;
}

// alpha/(2pi) = (sqrt(5)-1)/2, the golden mean, scaled to T = R/2piZ.
inline Frequency golden_frequency(double tau = 1.5, long n_max = 10000) {
  double phi = (std::sqrt(5.0) - 1.0) / 2.0;
  Frequency f({kTwoPi * phi});
  f.cf = continued_fraction_of(phi, 40);
  DioConstants dc;
  dc.tau = tau;
  dc.n_max = n_max;
  dc.kappa = fit_dc_constants(f, tau, n_max);
  f.dc = dc;
  f.verify(n_max);
  return f;
}

inline Frequency silver_frequency(double tau = 1.5, long n_max = 10000) {
  double s = std::sqrt(2.0) - 1.0;
  Frequency f({kTwoPi * s});
  f.cf = continued_fraction_of(s, 40);
  DioConstants dc;
  dc.tau = tau;
  dc.n_max = n_max;
  dc.kappa = fit_dc_constants(f, tau, n_max);
  f.dc = dc;
  f.verify(n_max);
  return f;
}

}  // namespace ckam

#endif  // CKAM_FREQUENCY_HPP
