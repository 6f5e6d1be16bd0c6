#include <gtest/gtest.h>

#include <array>

#include "loghankel/bounds.hpp"
#include "loghankel/caratheodory.hpp"
#include "oracles.hpp"

using namespace loghankel;

namespace {

void expect_close(cplx got, cplx want, double tol) { EXPECT_LE(std::abs(got - want), tol) << got << " vs " << want; }

RationalWitness mobius(std::array<cplx, 4> num, std::array<cplx, 4> den) { return {num, den}; }

}  // namespace

TEST(SchurParamsInvariants, RejectsOutOfRange) {
  EXPECT_THROW(SchurParams(-0.1, 0.0, 0.0), InputError);
  EXPECT_THROW(SchurParams(1.1, 0.0, 0.0), InputError);
  EXPECT_THROW(SchurParams(0.5, cplx(1.0, 0.1), 0.0), InputError);
  EXPECT_THROW(SchurParams(0.5, 0.0, cplx(0.0, 1.01)), InputError);
  EXPECT_THROW(SchurParams(std::nan(""), 0.0, 0.0), InputError);
  EXPECT_NO_THROW(SchurParams(1.0, cplx(0.0, 1.0), -1.0));
}

TEST(SchurToCoeffs, ZetaOneAtOne) {
  const auto c = schur_to_coeffs({1.0, cplx(0.3, -0.2), cplx(-0.5, 0.1)});
  expect_close(c.c1, 2.0, 1e-15);
  expect_close(c.c2, 2.0, 1e-15);
  expect_close(c.c3, 2.0, 1e-15);
}

TEST(SchurToCoeffs, UnimodularZetaTwo) {
  const auto c = schur_to_coeffs({0.0, 1.0, cplx(0.2, 0.7)});
  expect_close(c.c1, 0.0, 1e-15);
  expect_close(c.c2, 2.0, 1e-15);
  expect_close(c.c3, 0.0, 1e-15);
}

TEST(SchurToCoeffs, Substitution) {
  const auto c = schur_to_coeffs({0.5, 0.5, 1.0});
  expect_close(c.c1, 1.0, 1e-15);
  expect_close(c.c2, 1.25, 1e-15);
  expect_close(c.c3, 31.0 / 16.0, 1e-15);
}

// The three extremal witnesses and their published polynomial coefficients.
TEST(RationalFromSchur, FirstWitness) {
  const auto w = rational_from_schur({0.0302689, 1.0, 0.0});
  const std::array<cplx, 4> num{1.0, 0.0605378, 1.0, 0.0}, den{1.0, 0.0, -1.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    expect_close(w.numerator[k], num[k], 5e-7);
    expect_close(w.denominator[k], den[k], 5e-7);
  }
}

TEST(RationalFromSchur, SecondWitness) {
  const auto w = rational_from_schur({0.373776, -1.0, 0.0});
  const std::array<cplx, 4> num{1.0, 0.0, -1.0, 0.0}, den{1.0, -0.747551, 1.0, 0.0};
  for (int k = 0; k < 4; ++k) {
    expect_close(w.numerator[k], num[k], 5e-6);
    expect_close(w.denominator[k], den[k], 5e-6);
  }
}

TEST(RationalFromSchur, ThirdWitness) {
  const auto w = rational_from_schur({0.381423, -0.0871127, 1.0});
  const std::array<cplx, 4> den{1.0, -0.501762, 0.501762, -1.0};
  for (int k = 0; k < 4; ++k) expect_close(w.denominator[k], den[k], 5e-6);
}

TEST(RationalFromSchur, DispatchOnUnitModulus) {
  // |zeta2| = 1 gives a degree-two witness; interior zeta2 gives degree three.
  EXPECT_EQ(rational_from_schur({0.4, cplx(0.0, 1.0), 0.5}).denominator[3], cplx(0.0));
  EXPECT_NE(rational_from_schur({0.4, cplx(0.0, 0.99), 0.5}).denominator[3], cplx(0.0));
}

TEST(ExpandP, Mobius) {
  const auto p = expand_p(mobius({1.0, 1.0, 0.0, 0.0}, {1.0, -1.0, 0.0, 0.0}), 3);
  for (std::size_t n = 0; n <= 3; ++n) expect_close(p[n], n == 0 ? 1.0 : 2.0, 1e-15);
}

TEST(ExpandP, EvenMobius) {
  const auto p = expand_p(mobius({1.0, 0.0, 1.0, 0.0}, {1.0, 0.0, -1.0, 0.0}), 4);
  const std::array<double, 5> want{1.0, 0.0, 2.0, 0.0, 2.0};
  for (std::size_t n = 0; n <= 4; ++n) expect_close(p[n], want[n], 1e-15);
}

TEST(ExpandP, OneDivisionStep) {
  const auto p = expand_p(mobius({1.0, 0.0, -1.0, 0.0}, {1.0, -0.747551, 1.0, 0.0}), 1);
  expect_close(p[1], 0.747551, 1e-15);
}

TEST(PositivityScan, MobiusOnCircle) {
  const std::array<double, 1> radii{0.9};
  const double lowest = positivity_scan(mobius({1.0, 1.0, 0.0, 0.0}, {1.0, -1.0, 0.0, 0.0}), radii, 360);
  EXPECT_NEAR(lowest, 0.1 / 1.9, 1e-12);
}

TEST(PositivityScan, Constant) {
  const std::array<double, 3> radii{0.0, 0.5, 0.99};
  EXPECT_DOUBLE_EQ(positivity_scan(mobius({1.0, 0.0, 0.0, 0.0}, {1.0, 0.0, 0.0, 0.0}), radii, 64), 1.0);
}

TEST(PositivityScan, EvenMobius) {
  const std::array<double, 1> radii{0.5};
  const double lowest = positivity_scan(mobius({1.0, 0.0, 1.0, 0.0}, {1.0, 0.0, -1.0, 0.0}), radii, 360);
  EXPECT_NEAR(lowest, 0.6, 1e-12);
}

TEST(PositivityScan, PoleAndBadRadius) {
  const auto w = mobius({1.0, 1.0, 0.0, 0.0}, {1.0, -1.0, 0.0, 0.0});
  EXPECT_THROW(evaluate(w, cplx(1.0, 0.0)), PoleError);
  const std::array<double, 1> radii{1.0};
  EXPECT_THROW(positivity_scan(w, radii, 8), InputError);
}

// Properties over random Schur parameters.

TEST(CaratheodoryProperty, WitnessReproducesCoefficients) {
  Rng rng(201);
  for (int t = 0; t < 200; ++t) {
    const SchurParams params = sample_schur(rng);
    const auto c = schur_to_coeffs(params);
    const auto p = expand_p(rational_from_schur(params), 8);
    expect_close(p[0], 1.0, 1e-12);
    expect_close(p[1], c.c1, 1e-12);
    expect_close(p[2], c.c2, 1e-12);
    expect_close(p[3], c.c3, 1e-12);
  }
}

TEST(CaratheodoryProperty, WitnessMatchesOracleDivision) {
  Rng rng(202);
  for (int t = 0; t < 50; ++t) {
    const auto w = rational_from_schur(sample_schur(rng));
    const oracle::Poly num(w.numerator.begin(), w.numerator.end());
    const oracle::Poly den(w.denominator.begin(), w.denominator.end());
    const auto ref = oracle::mul(num, oracle::reciprocal(den, 8), 8);
    const auto p = expand_p(w, 8);
    for (std::size_t n = 0; n <= 8; ++n) expect_close(p[n], ref[n], 1e-10);
  }
}

TEST(CaratheodoryProperty, WitnessHasPositiveRealPart) {
  Rng rng(203);
  const std::array<double, 3> radii{0.5, 0.9, 0.999};
  for (int t = 0; t < 200; ++t) {
    EXPECT_GE(positivity_scan(rational_from_schur(sample_schur(rng)), radii, 720), -1e-9);
  }
}

TEST(CaratheodoryProperty, BoundaryWitnessHasPositiveRealPart) {
  Rng rng(204);
  const std::array<double, 3> radii{0.5, 0.9, 0.999};
  for (int t = 0; t < 50; ++t) {
    const SchurParams params{unit_real(rng), std::polar(1.0, 6.283 * unit_real(rng)), uniform_disk(rng)};
    EXPECT_GE(positivity_scan(rational_from_schur(params), radii, 720), -1e-9);
  }
}

TEST(CaratheodoryProperty, CoefficientsBounded) {
  Rng rng(205);
  for (int t = 0; t < 200; ++t) {
    const auto c = schur_to_coeffs(sample_schur(rng));
    EXPECT_LE(std::abs(c.c1), 2.0 + 1e-9);
    EXPECT_LE(std::abs(c.c2), 2.0 + 1e-9);
    EXPECT_LE(std::abs(c.c3), 2.0 + 1e-9);
  }
}

TEST(CaratheodoryProperty, Continuity) {
  Rng rng(206);
  const double h = 1e-8;
  for (int t = 0; t < 200; ++t) {
    const SchurParams base = sample_schur(rng);
    const auto c = schur_to_coeffs(base);
    const double z1 = std::clamp(base.zeta1() + h, 0.0, 1.0);
    // Shrink slightly so the perturbed points stay in the closed disk.
    const std::array<SchurParams, 3> moved{
        SchurParams{z1, base.zeta2(), base.zeta3()},
        SchurParams{base.zeta1(), base.zeta2() * (1.0 - h), base.zeta3()},
        SchurParams{base.zeta1(), base.zeta2(), base.zeta3() * (1.0 - h)}};
    for (const auto& m : moved) {
      const auto d = schur_to_coeffs(m);
      EXPECT_LE(std::abs(d.c1 - c.c1), 1e-6);
      EXPECT_LE(std::abs(d.c2 - c.c2), 1e-6);
      EXPECT_LE(std::abs(d.c3 - c.c3), 1e-6);
    }
  }
}

TEST(Sampling, DeterministicPerSeed) {
  Rng a(7), b(7);
  for (int t = 0; t < 20; ++t) {
    const auto x = sample_schur(a), y = sample_schur(b);
    EXPECT_EQ(x.zeta1(), y.zeta1());
    EXPECT_EQ(x.zeta2(), y.zeta2());
    EXPECT_EQ(x.zeta3(), y.zeta3());
  }
}
