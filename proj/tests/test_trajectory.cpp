#include <gtest/gtest.h>

#include <cmath>

#include "casimir/errors.hpp"
#include "casimir/trajectory.hpp"

using namespace casimir;
using numerics::constants::pi;
using trajectory::LoopTrajectory;

TEST(Loop, PositionShape) {
  const LoopTrajectory t{1.0, 2.0, 4.0};
  EXPECT_DOUBLE_EQ(trajectory::loop_position(0.0, t), 0.0);
  EXPECT_DOUBLE_EQ(trajectory::loop_position(1.5, t), 1.5);
  EXPECT_DOUBLE_EQ(trajectory::loop_position(2.0, t), 2.0);
  EXPECT_DOUBLE_EQ(trajectory::loop_position(-2.0, t), -2.0);
  EXPECT_NEAR(trajectory::loop_position(9.999999, t), 0.0, 1e-6);
  EXPECT_DOUBLE_EQ(trajectory::loop_position(10.0, t), 0.0);
  EXPECT_DOUBLE_EQ(trajectory::loop_position(-6.0, t), -1.0);
  EXPECT_DOUBLE_EQ(trajectory::loop_position(50.0, t), 0.0);
  EXPECT_DOUBLE_EQ(t.half_support(), 10.0);
}

// Oracle: mpmath quadrature of the defining integral, 30 digits.
TEST(Qhat, DefiningIntegralOracle) {
  const LoopTrajectory t{1.0, 10.0, 50.0};
  const auto q = trajectory::qhat_closed_form(1.3, 0.7, t);
  EXPECT_NEAR(q.real(), -0.504068510040675239417, 1e-12);
  EXPECT_EQ(q.imag(), 0.0);
  EXPECT_NEAR(trajectory::qhat_closed_form(1.3, -0.7, t).real(), -0.508946945987186981277, 1e-12);
}

TEST(Qhat, ClosedFormMatchesNumeric) {
  const LoopTrajectory t{1.0, 3.0, 7.0};
  const auto spec = numerics::default_spec().with_rel_tol(1e-11);
  for (double w : {-2.1, -0.4, 0.35, 1.0, 2.7}) {
    for (double wv : {-1.3, -0.2, 0.5, 1.0, 2.2}) {
      const auto c = trajectory::qhat_closed_form(w, wv, t);
      const auto n = trajectory::qhat_numeric(w, wv, t, spec);
      EXPECT_NEAR(std::abs(c - n) / std::abs(n), 0.0, 1e-8) << w << ' ' << wv;
    }
  }
}

TEST(Qhat, HermitianPairing) {
  const LoopTrajectory t{1.0, 4.0, 20.0};
  for (double w : {0.3, 1.7}) {
    for (double wv : {0.5, -1.1}) {
      const auto a = trajectory::qhat_closed_form(-w, -wv, t);
      const auto b = std::conj(trajectory::qhat_closed_form(w, wv, t));
      EXPECT_NEAR(std::abs(a - b), 0.0, 1e-12);
    }
  }
}

TEST(Qhat, RemovablePointAndInfiniteAlpha) {
  const LoopTrajectory inf{1.0, 5.0};
  const double wv = 0.8;
  const double at = trajectory::qhat_closed_form(wv, wv, inf).real();
  EXPECT_NEAR(at, 2.0 * wv * 5.0 / wv, 1e-12);
  EXPECT_NEAR(trajectory::qhat_closed_form(wv * (1 + 1e-12), wv, inf).real(), at, 1e-9);
  double prev = INFINITY;
  for (double alpha : {10.0, 100.0, 1000.0, 10000.0}) {
    const LoopTrajectory t{1.0, 5.0, alpha};
    double diff = 0.0;
    for (int i = 1; i <= 200; ++i) {
      const double w = 0.3 + 0.0135 * i;
      diff = std::max(diff, std::abs(trajectory::qhat_closed_form(w, wv, t).real() -
                                     trajectory::qhat_closed_form(w, wv, inf).real()));
    }
    EXPECT_LT(diff, prev);
    prev = diff;
  }
  EXPECT_LT(prev, 5e-3);
}

TEST(Qhat, ZeroVelocityAndErrors) {
  const LoopTrajectory t{1.0, 5.0, 3.0};
  EXPECT_EQ(trajectory::qhat_closed_form(1.0, 0.0, t), trajectory::complex(0.0));
  EXPECT_THROW(trajectory::qhat_closed_form(0.0, 1.0, t), DomainError);
  EXPECT_THROW(trajectory::qhat_closed_form(1.0, 1.0, LoopTrajectory{1.0, -1.0}), DomainError);
  EXPECT_THROW(trajectory::qhat_numeric(1.0, 1.0, LoopTrajectory{1.0, 1.0}, numerics::default_spec()),
               DomainError);
}

TEST(Kernel, EvenInOmegaV) {
  const LoopTrajectory t{1.0, 5.0};
  EXPECT_DOUBLE_EQ(trajectory::finite_tau_kernel(0.9, 1.2, t), trajectory::finite_tau_kernel(0.9, -1.2, t));
  EXPECT_GE(trajectory::finite_tau_kernel(0.9, 1.2, t), 0.0);
}

TEST(DeltaLimit, Kernel) {
  const auto k = trajectory::delta_kernel_I(2.0, 10.0);
  EXPECT_DOUBLE_EQ(k.prefactor(2.0), pi * 10.0 * 2.0);
  EXPECT_DOUBLE_EQ(k.integrate_positive([](double w) { return w * w; }), pi * 10.0 * 2.0 * 4.0);
  EXPECT_EQ(k.support().first, -2.0);
  EXPECT_TRUE(trajectory::delta_kernel_I(0.0, 1.0).is_zero());
  EXPECT_EQ(trajectory::delta_kernel_I(0.0, 1.0).integrate_positive([](double) { return 1.0; }), 0.0);
}

// Python oracle (scipy quad over the same window): rel error 0.0788 at tau = 50.
TEST(DeltaLimit, ConvergenceStudy) {
  const auto rows = trajectory::delta_convergence_study(1.0, 0.1, 50.0, 3, numerics::default_spec());
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_NEAR(rows[0].rel_error, 0.0788, 5e-4);
  EXPECT_DOUBLE_EQ(rows[0].prediction, pi * 50.0);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    EXPECT_DOUBLE_EQ(rows[i].tau, 2.0 * rows[i - 1].tau);
    EXPECT_NEAR(rows[i].error_ratio, 2.0, 0.2);
  }
}
