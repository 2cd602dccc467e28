#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "heuntra/jacobi.hpp"
#include "heuntra/polynomials.hpp"
#include "heuntra/tridiag.hpp"

using namespace heuntra;

namespace {

const WilsonParams kPositive{0.6, 1.1, 0.4, 0.9};

}  // namespace

TEST(WilsonEval, DegreeZeroIsOne) {
  EXPECT_EQ(wilson_eval(0, 0.7, kPositive), 1.0);
  EXPECT_EQ(wilson_eval(0, -0.3, kPositive), 1.0);
  EXPECT_THROW(wilson_eval(-1, 0.0, kPositive), DegenerateIndex);
}

TEST(WilsonEval, DegreeOneClosedForm) {
  // W_1 = sqrt((s+1)(a+b)(a+c)(a+d)s/((b+c)(b+d)(c+d)s)) [1 - s (a^2 + z^2)/((a+b)(a+c)(a+d))].
  const double a = kPositive.wa, b = kPositive.wb, c = kPositive.wc, d = kPositive.wd, s = kPositive.sum();
  for (double z2 : {0.0, 0.5, 2.3, -0.1}) {
    const double pref = std::sqrt((s + 1.0) / s * (a + b) * (a + c) * (a + d) * s / ((b + c) * (b + d) * (c + d)));
    const double f = 1.0 - s * (a * a + z2) / ((a + b) * (a + c) * (a + d));
    EXPECT_NEAR(wilson_eval(1, z2, kPositive), pref * f, 1e-13);
  }
}

TEST(WilsonEval, SymmetricInTheParameters) {
  const WilsonParams swapped{kPositive.wc, kPositive.wd, kPositive.wa, kPositive.wb};
  for (long n = 0; n <= 6; ++n) {
    for (double z2 : {0.3, 1.7}) {
      EXPECT_NEAR(wilson_eval(n, z2, kPositive), wilson_eval(n, z2, swapped),
                  1e-11 * (1.0 + std::fabs(wilson_eval(n, z2, kPositive))));
    }
  }
}

TEST(WilsonEval, MatchesTheRecursion) {
  const TridiagonalSystem sys = wilson_system(kPositive, 12);
  for (double z2 : {0.0, 0.8, 3.5, -0.2}) {
    const auto seq = generate_sequence(sys, z2, 11);
    for (long n = 0; n <= 11; ++n) {
      const double w = wilson_eval(n, z2, kPositive);
      EXPECT_NEAR(seq[static_cast<std::size_t>(n)], w, 1e-10 * (1.0 + std::fabs(w))) << "n = " << n;
    }
  }
}

TEST(WilsonRecursion, SymmetricOffDiagonals) {
  for (long n = 0; n < 10; ++n) {
    EXPECT_NEAR(wilson_recursion_row(n, kPositive).sup, wilson_recursion_row(n + 1, kPositive).sub, 1e-13);
    EXPECT_LT(wilson_recursion_row(n, kPositive).sup, 0.0);
  }
}

TEST(WilsonRecursion, PairedFormAgreesForRealTau) {
  const double sigma = 0.7, tau = 1.3, gamma = 0.45;
  const WilsonParams w = WilsonParams::from_sigma_tau(sigma, tau, gamma);
  const WilsonParams reordered{w.wc, w.wd, w.wa, w.wb};
  const PairedWilsonParams pw{sigma, tau * tau, gamma};
  for (long n = 0; n <= 10; ++n) {
    const RecursionRow r = wilson_recursion_row(n, reordered);
    const RecursionRow q = paired_wilson_row(n, pw, 0.0, false);
    EXPECT_NEAR(r.diag, q.diag, 1e-12 * (1.0 + std::fabs(r.diag))) << n;
    EXPECT_NEAR(r.sup, q.sup, 1e-12 * (1.0 + std::fabs(r.sup))) << n;
  }
}

TEST(WilsonRecursion, ImaginaryTauStaysReal) {
  const PairedWilsonParams pw{0.5, -1.0, 0.5};
  for (long n = 0; n <= 20; ++n) {
    const RecursionRow r = paired_wilson_row(n, pw, 0.3, true);
    EXPECT_TRUE(std::isfinite(r.diag));
    EXPECT_GT(r.sup, 0.0);
    if (n > 0) {
      EXPECT_NEAR(r.sub, paired_wilson_row(n - 1, pw, 0.3, true).sup, 1e-12);
    }
  }
}

TEST(WilsonRecursion, DeformationShiftsTheDiagonal) {
  const ModifiedWilson m{kPositive, 0.4};
  for (long n = 0; n <= 5; ++n) {
    const RecursionRow base = wilson_recursion_row(n, kPositive);
    const RecursionRow mod = modified_wilson_row(n, m);
    const double k = static_cast<double>(n);
    const double extra = (k + kPositive.wa + kPositive.wc) * (k + kPositive.wb + kPositive.wd) - k;
    EXPECT_NEAR(mod.diag, base.diag - 0.4 * extra, 1e-13);
    EXPECT_DOUBLE_EQ(mod.sup, -base.sup);
  }
}

TEST(WilsonSpectrum, FinitePoints) {
  const WilsonSpectrum s = wilson_spectrum(0.5, 2.0);
  ASSERT_EQ(s.N, 1);
  EXPECT_DOUBLE_EQ(s.points[0], -2.25);
  EXPECT_DOUBLE_EQ(s.points[1], -0.25);
  EXPECT_EQ(wilson_spectrum(0.5, 2.5).N, 2);  // integer span snaps
  EXPECT_THROW(wilson_spectrum(2.0, 0.5), RegimeError);
}

TEST(WilsonSpectrum, DiscreteWeightsNormalize) {
  // Parameters (-1.5, 2.5, 0.5, 0.5): the discrete part carries the whole mass.
  const double q0 = wilson_discrete_weight(0, 0.5, 2.0, 0.5);
  const double q1 = wilson_discrete_weight(1, 0.5, 2.0, 0.5);
  EXPECT_NEAR(q0, 0.75, 1e-12);
  EXPECT_NEAR(q1, 0.25, 1e-12);
  EXPECT_THROW(wilson_discrete_weight(2, 0.5, 2.0, 0.5), RegimeError);
}

TEST(WilsonSpectrum, WeightsMatchTheGaussRule) {
  const TridiagonalSystem sys = wilson_system(WilsonParams::from_sigma_tau(0.5, 2.0, 0.5), 2);
  const TruncationEigen t = truncation_eigen(sys, 2);
  ASSERT_EQ(t.values.size(), 2u);
  EXPECT_NEAR(t.values[0], -2.25, 1e-12);
  EXPECT_NEAR(t.values[1], -0.25, 1e-12);
  EXPECT_NEAR(t.weights[0], wilson_discrete_weight(0, 0.5, 2.0, 0.5), 1e-12);
  EXPECT_NEAR(t.weights[1], wilson_discrete_weight(1, 0.5, 2.0, 0.5), 1e-12);
}

TEST(WilsonSpectrum, GammaPoleIsReported) {
  // gamma - sigma + tau = 0 puts Gamma at a pole.
  EXPECT_THROW(wilson_discrete_weight(0, 0.5, 2.0, -1.5), GammaPole);
}

TEST(Families, JacobiCosSystemIsTheJacobiRecursion) {
  const JacobiIndex j{1.5, 0.25};
  const TridiagonalSystem sys = jacobi_cos_system(j.mu, j.nu, 12);
  for (double x : {0.1, 0.45, 0.9}) {
    const auto seq = generate_sequence(sys, 2.0 * x - 1.0, 10);
    const double c0 = jacobi_norm_constant(0, j);
    for (long n = 0; n <= 10; ++n) {
      const double exact = jacobi_norm_constant(n, j) * jacobi_eval(n, j, x) / c0;
      EXPECT_NEAR(seq[static_cast<std::size_t>(n)], exact, 1e-11 * (1.0 + std::fabs(exact))) << n;
    }
  }
}

TEST(Families, QRowsReduceAtZero) {
  const QFamily q{0.5, 1.5, 0.3, 1.1};
  const TridiagonalSystem sys = q_system(q, 8);
  const TridiagonalSystem jac = jacobi_cos_system(q.mu, q.nu, 8);
  for (std::size_t n = 0; n < 8; ++n) {
    const long k = static_cast<long>(n);
    EXPECT_NEAR(sys.weight[n], std::sin(q.theta) / family_delta(k, q.mu, q.nu, q.sigma_sq), 1e-15);
    EXPECT_NEAR(sys.diag[n], std::cos(q.theta) - jac.diag[n], 1e-15);
    EXPECT_NEAR(sys.off[n], -jac.off[n], 1e-15);
  }
  EXPECT_EQ(sys.coupling, Coupling::Weighted);
}

TEST(Families, HAndGRows) {
  const QFamily q{0.5, 1.5, 0.3, 1.1};
  const FamilyRow h = h_row(3, q);
  EXPECT_NEAR(h.weight, std::sin(q.theta) * family_delta(3, q.mu, q.nu, q.sigma_sq), 1e-15);
  const GFamily g{0.5, 1.5, -0.4, 0.3};
  const FamilyRow r = g_row(2, g);
  EXPECT_NEAR(r.weight, 0.91 / family_delta(2, g.mu, g.nu, g.sigma_sq), 1e-15);
  EXPECT_NEAR(r.scale, 1.09, 1e-15);
  EXPECT_NEAR(r.diag, 0.6 * coeff_F(2, g.mu, g.nu), 1e-15);
  EXPECT_NEAR(r.off, 1.2 * coeff_G(2, g.mu, g.nu), 1e-15);
  EXPECT_THROW(q_row(0, QFamily{0.5, 1.5, 0.3, M_PI}), RegimeError);
  EXPECT_THROW(g_row(0, GFamily{0.5, 1.5, 0.3, 1.0}), RegimeError);
  // (0 + 1.5)^2 = sigma^2 makes the row factor vanish.
  EXPECT_THROW(q_row(0, QFamily{0.5, 1.5, 2.25, 1.0}), ZeroDenominator);
}
