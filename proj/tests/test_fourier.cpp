#include "ckam/fourier.hpp"

#include <gtest/gtest.h>

#include <cmath>

#include "ckam/common.hpp"

using namespace ckam;

namespace {

FourierSeries scalar_series(std::map<int, Complex> modes, ValueKind k = ValueKind::ComplexScalar) {
  FourierSeries f(1, false, k);
  for (auto& [n, c] : modes) f.set({n}, Mat2{c, 0, 0, 0});
  return f;
}

FourierSeries cosine() {
  return scalar_series({{1, 0.5}, {-1, 0.5}}, ValueKind::RealScalar);
}

FourierSeries random_real_series(SplitMix64& rng, int max_mode) {
  FourierSeries f(1, false, ValueKind::RealScalar);
  f.set({0}, Mat2{rng.uniform(-1, 1), 0, 0, 0});
  for (int n = 1; n <= max_mode; ++n) {
    Complex c(rng.uniform(-1, 1), rng.uniform(-1, 1));
    c *= std::exp(-0.3 * n);
    f.set({n}, Mat2{c, 0, 0, 0});
    f.set({-n}, Mat2{std::conj(c), 0, 0, 0});
  }
  return f;
}

}  // namespace

TEST(Eval, ConstantAndCosine) {
  FourierSeries c = scalar_series({{0, 3.0}});
  EXPECT_NEAR(std::abs(c.eval_scalar({1.7}) - 3.0), 0.0, 1e-15);

  FourierSeries f = cosine();
  EXPECT_NEAR(f.eval_scalar({0.0}).real(), 1.0, 1e-15);
  EXPECT_NEAR(f.eval_scalar({kPi / 3}).real(), 0.5, 1e-15);
  // direct evaluation oracle: sum the exponentials by hand
  double th = kPi / 3;
  Complex oracle = 0.5 * std::polar(1.0, th) + 0.5 * std::polar(1.0, -th);
  EXPECT_NEAR(std::abs(f.eval_scalar({th}) - oracle), 0.0, 1e-15);
  // imaginary part controlled by the coefficient mass
  EXPECT_LE(std::abs(f.eval_scalar({2.13}).imag()), 1e-12 * f.majorant0());
}

TEST(Eval, DimensionMismatch) {
  FourierSeries f = cosine();
  EXPECT_THROW(f.eval({0.0, 0.0}), NumericError);
}

TEST(AnalyticNorm, HandComputedValues) {
  FourierSeries one = scalar_series({{1, 1.0}});
  double h = 0.37;
  EXPECT_NEAR(one.analytic_norm(h), std::exp(h), 1e-14);

  FourierSeries z = FourierSeries::zero(1, ValueKind::RealScalar);
  EXPECT_EQ(z.analytic_norm(1.0), 0.0);

  FourierSeries two = scalar_series({{2, 0.3}, {-2, 0.3}});
  EXPECT_NEAR(two.analytic_norm(0.5), 0.6 * std::exp(1.0), 1e-12);
}

TEST(AnalyticNorm, MonotoneAndTriangle) {
  SplitMix64 rng(7);
  for (int i = 0; i < 10; ++i) {
    FourierSeries f = random_real_series(rng, 8);
    FourierSeries g = random_real_series(rng, 8);
    double r1 = rng.uniform(0, 0.5), r2 = r1 + rng.uniform(0, 0.5);
    EXPECT_LE(f.analytic_norm(r1), f.analytic_norm(r2) + 1e-15);
    EXPECT_LE(add(f, g).analytic_norm(r1),
              f.analytic_norm(r1) + g.analytic_norm(r1) + 1e-12);
    EXPECT_LE(f.c0_norm(256), f.analytic_norm(0.0) + 1e-12);
  }
}

TEST(CkNorm, Oracles) {
  FourierSeries c = scalar_series({{0, 2.5}});
  EXPECT_NEAR(c.ck_norm(3, 64), 2.5, 1e-13);

  FourierSeries f = cosine();
  EXPECT_NEAR(f.ck_norm(1, 512), 1.0, 1e-4);  // |cos| and |sin| envelopes

  FourierSeries g = scalar_series({{2, 0.5}, {-2, 0.5}}, ValueKind::RealScalar);  // cos(2t)
  EXPECT_NEAR(g.ck_norm(2, 512), 4.0, 1e-3);  // second derivative -4cos(2t)

  EXPECT_THROW(g.ck_norm(1, 4), NumericError);  // grid too coarse
}

TEST(TruncateRemainder, PartitionExact) {
  FourierSeries f = scalar_series({{3, 1.0}});
  EXPECT_TRUE(f.truncate(2).empty());
  EXPECT_EQ(f.remainder(2).support_size(), 1u);

  FourierSeries c = scalar_series({{0, 5.0}});
  EXPECT_EQ(c.truncate(1).support_size(), 1u);
  EXPECT_TRUE(c.remainder(1).empty());

  FourierSeries m = scalar_series({{0, 1.0}, {1, 2.0}, {-1, 2.0}, {4, 3.0}, {-4, 3.0}});
  FourierSeries t = m.truncate(2), r = m.remainder(2);
  EXPECT_EQ(t.support_size(), 3u);
  EXPECT_EQ(r.support_size(), 2u);
  // bit-exact reconstruction
  FourierSeries sum = add(t, r);
  for (const auto& [n, v] : m.coeffs) {
    EXPECT_EQ(sum.coeff(n).a.real(), v.a.real());
    EXPECT_EQ(sum.coeff(n).a.imag(), v.a.imag());
  }
}

TEST(Mollify, BandLimitedFixedPoint) {
  FourierSeries f = cosine();
  // large j: window passes the support, reproduction within damping tol
  FourierSeries f8 = mollify(f, 8);
  EXPECT_LE(sub(f8, f).majorant0(), 1e-12);
  // dense-grid comparison oracle
  double sup = 0;
  for (int i = 0; i < 512; ++i) {
    double th = kTwoPi * i / 512;
    sup = std::max(sup, std::abs((f8.eval_scalar({th}) - f.eval_scalar({th})).real()));
  }
  EXPECT_LE(sup, 1e-10);
}

TEST(Mollify, DifferencesDecay) {
  // f = sum_{|n|<=8} n^{-3} e^{int} (real-symmetrized)
  FourierSeries f(1, false, ValueKind::RealScalar);
  for (int n = 1; n <= 8; ++n) {
    double c = std::pow(n, -3.0);
    f.set({n}, Mat2{c, 0, 0, 0});
    f.set({-n}, Mat2{c, 0, 0, 0});
  }
  std::vector<double> diffs;
  for (int j = 1; j <= 10; ++j) {
    FourierSeries d = sub(mollify(f, j + 1), mollify(f, j));
    diffs.push_back(d.analytic_norm(1.0 / (j + 1)));
  }
  for (std::size_t i = 1; i < diffs.size(); ++i)
    EXPECT_LE(diffs[i], diffs[i - 1] + 1e-15);
}

TEST(Mollify, MeasuredConstantsBounded) {
  // the three Zehnder-style estimates, constants measured over j in [1,20]
  FourierSeries f(1, false, ValueKind::RealScalar);
  for (int n = 1; n <= 8; ++n) {
    double c = std::pow(n, -4.0);
    f.set({n}, Mat2{c, 0, 0, 0});
    f.set({-n}, Mat2{c, 0, 0, 0});
  }
  const int k = 3;
  double fk = f.ck_norm(k, 256);
  double c1 = 0, c2 = 0, c3 = 0;
  double prev_err = -1;
  for (int j = 1; j <= 20; ++j) {
    FourierSeries fj = mollify(f, j);
    double err = sub(fj, f).ck_norm(k, 256);
    if (j > 3 && prev_err >= 0) { EXPECT_LE(err, prev_err + 1e-12); }
    prev_err = err;
    c1 = std::max(c1, fj.analytic_norm(1.0 / j) / fk);
    FourierSeries d = sub(mollify(f, j + 1), fj);
    c2 = std::max(c2, d.analytic_norm(1.0 / (j + 1)) / (std::pow(j, -(double)k) * fk));
    c3 = std::max(c3, err / fk);
  }
  // uniform over j (measured, generous cap)
  EXPECT_LT(c1, 100.0);
  EXPECT_LT(c2, 100.0);
  EXPECT_LT(c3, 10.0);
}

TEST(DoubledLattice, LiftAndProject) {
  FourierSeries f = cosine();
  FourierSeries d = f.to_doubled();
  EXPECT_TRUE(d.doubled);
  EXPECT_NEAR(std::abs(d.eval_scalar({1.3}) - f.eval_scalar({1.3})), 0.0, 1e-14);
  EXPECT_NEAR(d.analytic_norm(0.7), f.analytic_norm(0.7), 1e-12);
  FourierSeries back = d.to_single();
  EXPECT_EQ(back.support_size(), f.support_size());

  // genuine half-integer mode cannot be projected
  FourierSeries h(1, true, ValueKind::ComplexScalar);
  h.set({1}, Mat2{1.0, 0, 0, 0});  // frequency 1/2
  EXPECT_THROW(h.to_single(), NumericError);
}

TEST(Products, ConvolutionMatchesPointwise) {
  SplitMix64 rng(9);
  FourierSeries f = random_real_series(rng, 5);
  FourierSeries g = random_real_series(rng, 4);
  FourierSeries p = mul(f, g);
  for (int i = 0; i < 16; ++i) {
    double th = kTwoPi * i / 16;
    Complex want = f.eval_scalar({th}) * g.eval_scalar({th});
    EXPECT_NEAR(std::abs(p.eval_scalar({th}) - want), 0.0, 1e-12);
  }
}

TEST(Products, MatrixSupportPolicy) {
  FourierSeries f(1, false, ValueKind::RealMat2);
  f.set({1}, Mat2{0, 1, 1, 0});
  f.set({-1}, Mat2{0, 1, 1, 0});
  double dropped = 0;
  SupportPolicy pol;
  pol.max_abs_mode = 1;
  pol.dropped = &dropped;
  FourierSeries p = mul(f, f, pol);
  EXPECT_EQ(p.coeff({2}).max_abs(), 0.0);
  EXPECT_GT(dropped, 0.0);
}

TEST(DevSpace, ExpLogRoundTripPreservesTinyScales) {
  // exp/log in deviation space keeps absolute precision far below 1e-16
  FourierSeries y(1, false, ValueKind::Su11);
  add_su11_vmode(y, {1}, Complex(1e-13, 2e-13));
  add_su11_tmode(y, {0}, 3e-13);
  FourierSeries e = series_exp_dev(y);
  FourierSeries back = series_log_dev(e);
  EXPECT_LE(sub(back, y).majorant0(), 1e-27);
}

TEST(DevSpace, ExpMatchesPointwiseExp) {
  FourierSeries y(1, false, ValueKind::Sl2R);
  y.set({1}, Mat2{0.05, 0.1, -0.02, -0.05});
  y.set({-1}, Mat2{0.05, 0.1, -0.02, -0.05});
  FourierSeries e = series_exp_dev(y);
  for (int i = 0; i < 8; ++i) {
    double th = kTwoPi * i / 8;
    Mat2 want = exp2(y.eval({th}));
    Mat2 got = Mat2::identity() + e.eval({th});
    EXPECT_LE(op_norm(want - got), 1e-13);
  }
}

TEST(Shift, MatchesTranslation) {
  SplitMix64 rng(10);
  FourierSeries f = random_real_series(rng, 6);
  std::vector<double> al{1.234};
  FourierSeries s = f.shifted(al);
  for (int i = 0; i < 8; ++i) {
    double th = kTwoPi * i / 8;
    EXPECT_NEAR(std::abs(s.eval_scalar({th}) - f.eval_scalar({th + al[0]})), 0.0, 1e-12);
  }
}

TEST(Validators, TagChecks) {
  FourierSeries y(1, false, ValueKind::Su11);
  add_su11_vmode(y, {2}, Complex(0.3, 0.1));
  add_su11_tmode(y, {1}, Complex(0.2, -0.05));
  EXPECT_TRUE(su11_valued(y));
  SplitMix64 rng(13);
  EXPECT_TRUE(real_valued(random_real_series(rng, 5)));
}

TEST(NormReportType, C0DominatedByMajorant) {
  SplitMix64 rng(14);
  for (int i = 0; i < 10; ++i) {
    FourierSeries f = random_real_series(rng, 8);
    NormReport rep = norm_report(f, 0.0, 1, 256);
    EXPECT_LE(rep.c0_norm, rep.analytic_majorant_at_r + 1e-12);
  }
}
