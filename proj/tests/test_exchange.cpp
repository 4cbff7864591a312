#include <cmath>
#include <limits>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "viscoex/errors.hpp"
#include "viscoex/exchange.hpp"

using namespace viscoex;

namespace {

Orbital gaussian_at(double center, double sigma = 1.0) {
    return {OrbitalKind::gaussian, center, sigma};
}

const InteractionKernel unit_well{KernelKind::gaussian_well, 1.0, 1.0};

double relative(double a, double b) {
    return std::abs(a - b) / std::abs(b);
}

}  // namespace

TEST(Oracle, ClosedFormsAgreeWithBruteForce) {
    // The closed-form Gaussian integrals are themselves checked against a
    // dense midpoint sum before they are used as references.
    for (const auto& [d, s1, s2, w] : {std::tuple{0.0, 1.0, 1.0, 1.0}, std::tuple{1.5, 0.8, 1.3, 0.6}}) {
        const double c1 = -0.5 * d;
        const double c2 = 0.5 * d;
        const auto U = [w](double r) { return std::exp(-0.5 * r * r / (w * w)); };
        const auto direct = [&](double x1, double x2) {
            const double p1 = oracle::gaussian(x1, c1, s1);
            const double p2 = oracle::gaussian(x2, c2, s2);
            return U(x2 - x1) * p1 * p1 * p2 * p2;
        };
        const auto exchange = [&](double x1, double x2) {
            return U(x2 - x1) * oracle::gaussian(x1, c1, s1) * oracle::gaussian(x1, c2, s2) *
                   oracle::gaussian(x2, c1, s1) * oracle::gaussian(x2, c2, s2);
        };
        EXPECT_NEAR(oracle::midpoint_2d(direct, -12.0, 12.0, 1200), oracle::gaussian_well_direct(d, s1, s2, 1.0, w),
                    1e-12);
        EXPECT_NEAR(oracle::midpoint_2d(exchange, -12.0, 12.0, 1200),
                    oracle::gaussian_well_exchange(d, s1, s2, 1.0, w), 1e-12);
    }
}

TEST(EvalOrbital, NormalizationAndSymmetry) {
    EXPECT_NEAR(eval_orbital(gaussian_at(0.0), 0.0), 0.75112554446494248, 1e-16);
    const Orbital shifted = gaussian_at(2.0, 0.7);
    EXPECT_DOUBLE_EQ(eval_orbital(shifted, 2.0 + 0.9), eval_orbital(shifted, 2.0 - 0.9));
    const Orbital centered = gaussian_at(0.0, 1.3);
    EXPECT_EQ(eval_orbital(centered, 1.1), eval_orbital(centered, -1.1));

    for (const double sigma : {0.05, 1.0, 7.0}) {
        const Orbital orb = gaussian_at(0.3, sigma);
        const double norm = oracle::midpoint_1d(
            [&](double x) { return std::pow(eval_orbital(orb, x), 2); }, 0.3 - 12 * sigma, 0.3 + 12 * sigma, 4000);
        EXPECT_NEAR(norm, 1.0, 1e-10) << sigma;
    }
}

TEST(Kernel, Forms) {
    const InteractionKernel well{KernelKind::gaussian_well, 2.0, 0.5};
    EXPECT_EQ(well(0.0), 2.0);
    EXPECT_DOUBLE_EQ(well(0.5), 2.0 * std::exp(-0.5));
    EXPECT_EQ(well(0.3), well(-0.3));
    const InteractionKernel soft{KernelKind::soft_coulomb, 3.0, 4.0};
    EXPECT_DOUBLE_EQ(soft(3.0), 3.0 / 5.0);
    EXPECT_THROW((InteractionKernel{KernelKind::soft_coulomb, 1.0, 0.0}.validate()), ConfigError);
}

TEST(DirectIntegral, MatchesClosedForm) {
    const double A = direct_integral(gaussian_at(0.0), gaussian_at(0.0), unit_well);
    EXPECT_NEAR(A, 1.0 / std::sqrt(2.0), 1e-10 / std::sqrt(2.0));
    EXPECT_LE(relative(A, oracle::gaussian_well_direct(0.0, 1.0, 1.0, 1.0, 1.0)), 1e-10);

    const InteractionKernel odd{KernelKind::gaussian_well, -0.7, 0.4};
    const double A2 = direct_integral(gaussian_at(-1.0, 0.6), gaussian_at(0.8, 1.4), odd);
    EXPECT_LE(relative(A2, oracle::gaussian_well_direct(1.8, 0.6, 1.4, -0.7, 0.4)), 1e-10);
}

TEST(DirectIntegral, ZeroKernelAndFarApart) {
    const InteractionKernel zero{KernelKind::gaussian_well, 0.0, 1.0};
    EXPECT_EQ(direct_integral(gaussian_at(0.0), gaussian_at(1.0), zero), 0.0);
    EXPECT_LT(std::abs(direct_integral(gaussian_at(-10.0), gaussian_at(10.0), unit_well)), 1e-12);
}

TEST(ExchangeIntegral, IdenticalOrbitalsGiveDirect) {
    for (const InteractionKernel& kernel :
         {unit_well, InteractionKernel{KernelKind::soft_coulomb, 1.0, 1.0},
          InteractionKernel{KernelKind::soft_coulomb, 2.5, 0.3}}) {
        const Orbital orb = gaussian_at(0.4, 0.9);
        const ExchangeResult r = quadrature_pair_integrals(orb, orb, kernel);
        EXPECT_LE(std::abs(r.A - r.J0) / std::abs(r.A), 1e-10);
    }
}

TEST(ExchangeIntegral, SeparationDependenceMatchesClosedForm) {
    const double at0 = oracle::gaussian_well_exchange(0.0, 1.0, 1.0, 1.0, 1.0);
    for (const double d : {0.0, 1.0, 2.0}) {
        const double J0 = exchange_integral(gaussian_at(-0.5 * d), gaussian_at(0.5 * d), unit_well);
        EXPECT_LE(relative(J0, oracle::gaussian_well_exchange(d, 1.0, 1.0, 1.0, 1.0)), 1e-10) << d;
        EXPECT_LE(relative(J0, std::exp(-0.5 * d * d) * at0), 1e-10) << d;
    }
    EXPECT_LT(std::abs(exchange_integral(gaussian_at(-10.0), gaussian_at(10.0), unit_well)), 1e-12);
}

TEST(ExchangeIntegral, PositiveAndMonotoneForGaussianWell) {
    double previous = std::numeric_limits<double>::infinity();
    for (const double d : {0.0, 0.5, 1.0, 2.0, 4.0}) {
        const double J0 = exchange_integral(gaussian_at(-0.5 * d), gaussian_at(0.5 * d), unit_well);
        EXPECT_GT(J0, 0.0);
        EXPECT_LT(J0, previous) << d;
        previous = J0;
    }

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> center(-3.0, 3.0);
    std::uniform_real_distribution<double> width(0.3, 2.0);
    for (int trial = 0; trial < 25; ++trial) {
        const InteractionKernel kernel{KernelKind::gaussian_well, width(rng), width(rng)};
        const double J0 = exchange_integral(gaussian_at(center(rng), width(rng)),
                                            gaussian_at(center(rng), width(rng)), kernel);
        ASSERT_GE(J0, 0.0);
    }
}

TEST(Quadrature, ConvergedAt200Nodes) {
    const std::tuple<Orbital, Orbital, InteractionKernel> cases[] = {
        {gaussian_at(-0.5), gaussian_at(0.5), unit_well},
        {gaussian_at(-1.0), gaussian_at(1.0), InteractionKernel{KernelKind::soft_coulomb, 1.0, 1.0}},
        {gaussian_at(0.0, 0.7), gaussian_at(0.9, 1.2), unit_well},
    };
    for (const auto& [o1, o2, kernel] : cases) {
        const ExchangeResult coarse = quadrature_pair_integrals(o1, o2, kernel, {200, 10.0, 1e-10});
        const ExchangeResult fine = quadrature_pair_integrals(o1, o2, kernel, {400, 10.0, 1e-10});
        EXPECT_LE(relative(coarse.A, fine.A), 1e-10);
        EXPECT_LE(relative(coarse.J0, fine.J0), 1e-10);
    }
}

TEST(Quadrature, RejectsUnderresolvedSpecs) {
    EXPECT_THROW(direct_integral(gaussian_at(0.0), gaussian_at(0.0), unit_well, {31, 10.0, 1e-10}),
                 ConfigError);
    // A domain of +-1 sigma cannot hold a normalized orbital.
    EXPECT_THROW(direct_integral(gaussian_at(0.0), gaussian_at(0.0), unit_well, {200, 1.0, 1e-10}),
                 DomainError);
    EXPECT_THROW(direct_integral(gaussian_at(0.0, -1.0), gaussian_at(0.0), unit_well), ConfigError);
}

TEST(ModulatedExchange, Limits) {
    EXPECT_EQ(modulated_exchange(0.8, 0.0), 0.8);
    EXPECT_EQ(modulated_exchange(0.8, 1.0), 0.4);
    EXPECT_LE(std::abs(modulated_exchange(0.8, 1e8)), 1e-15 * 0.8);
    EXPECT_THROW(modulated_exchange(1.0, -1.0), DomainError);

    double previous = modulated_exchange(1.0, 0.0);
    for (double x = 1e-3; x < 1e6; x *= 1.5) {
        const double J = modulated_exchange(1.0, x);
        ASSERT_LE(J, previous);
        ASSERT_GE(J, 0.0);
        previous = J;
    }
}

TEST(PairEnergies, Examples) {
    const PairEnergies e = pair_energies(1.0, 0.25);
    EXPECT_EQ(e.symmetric, 1.25);
    EXPECT_EQ(e.antisymmetric, 0.75);
    const PairEnergies degenerate = pair_energies(0.6, 0.0);
    EXPECT_EQ(degenerate.symmetric, degenerate.antisymmetric);
    const PairEnergies split = pair_energies(0.0, 1.0);
    EXPECT_EQ(split.symmetric, 1.0);
    EXPECT_EQ(split.antisymmetric, -1.0);
    EXPECT_THROW(pair_energies(std::nan(""), 1.0), DomainError);
}

TEST(PairEnergies, MeanIsDirectIntegralProperty) {
    std::mt19937_64 rng(3);
    std::uniform_real_distribution<double> value(-10.0, 10.0);
    for (int i = 0; i < 10000; ++i) {
        const double A = value(rng);
        const double J = value(rng);
        const PairEnergies e = pair_energies(A, J);
        const double ulp = std::numeric_limits<double>::epsilon() * std::max(std::abs(A), std::abs(J));
        ASSERT_NEAR(0.5 * (e.symmetric + e.antisymmetric), A, 2 * ulp);
        ASSERT_NEAR(e.symmetric - e.antisymmetric, 2 * J, 4 * ulp);
    }
}

TEST(ExchangeResult, ModulateUpdatesEnergies) {
    ExchangeResult r = quadrature_pair_integrals(gaussian_at(-0.5), gaussian_at(0.5), unit_well);
    EXPECT_EQ(r.method, IntegrationMethod::quadrature);
    EXPECT_FALSE(r.stderr_A.has_value());
    EXPECT_EQ(r.J_modulated, r.J0);
    r.modulate(1.0);
    EXPECT_EQ(r.J_modulated, 0.5 * r.J0);
    EXPECT_EQ(r.E_sym, r.A + r.J_modulated);
    EXPECT_EQ(r.E_anti, r.A - r.J_modulated);
}
