#include "support.hpp"

#include <gtest/gtest.h>

using namespace pqcomb;
using namespace pqcomb::testing_support;

namespace {

// Classical moments computed from scratch, independent of the library.
Scalar direct_binomial_moment(const DiscreteDistribution& dist, long j)
{
    Scalar sum = 0;
    for (const auto& [x, p] : dist.probabilities()) {
        Scalar c = 1;
        for (long i = 0; i < j; ++i) c = c * (x - i) / (i + 1);
        sum += c * p;
    }
    return sum;
}

}  // namespace

TEST(Distribution, Validation)
{
    EXPECT_THROW(DiscreteDistribution({{0, R(1, 2)}}), DomainViolation);
    EXPECT_THROW(DiscreteDistribution({{-1, R(1)}}), DomainViolation);
    EXPECT_THROW(DiscreteDistribution({{0, R(3, 2)}, {1, R(-1, 2)}}), DomainViolation);
    EXPECT_THROW(DiscreteDistribution({}), DomainViolation);
    DiscreteDistribution d({{0, R(1, 2)}, {3, R(0)}, {5, R(1, 2)}});
    EXPECT_EQ(d.probabilities().size(), 2u);
    EXPECT_EQ(d.max_point(), 5);
    EXPECT_EQ(d.probability(3), R(0));
}

TEST(Distribution, JsonRoundTrip)
{
    auto d = parse_distribution_json(R"({"probs": {"0": "1/2", "1": "1/4", "4": "1/4"}})");
    EXPECT_EQ(d.probability(4), R(1, 4));
    EXPECT_EQ(parse_distribution_json(distribution_to_json(d)), d);
    EXPECT_THROW(parse_distribution_json(R"({"probs": {"x": "1"}})"), ParseError);
    EXPECT_THROW(parse_distribution_json(R"({"probs": {"0": "1/0"}})"), ParseError);
    EXPECT_THROW(parse_distribution_json(R"({"p": {}})"), ParseError);
    EXPECT_THROW(parse_distribution_json(R"({"probs": {"0": "1/3"}})"), DomainViolation);
}

TEST(Distribution, SeededLawsAreReproducible)
{
    EXPECT_EQ(random_distribution(7, 12), random_distribution(7, 12));
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        auto d = random_distribution(seed, 12);
        EXPECT_LE(d.max_point(), 12);
    }
}

TEST(Moments, FactorialAndBinomialExamples)
{
    EXPECT_EQ(deformed_factorial_moment(q_def(), point_mass(3), 2), R(21, 8));
    EXPECT_EQ(deformed_factorial_moment(q_def(), uniform_distribution({0, 1}), 1), R(1, 2));
    EXPECT_EQ(deformed_binomial_moment(q_def(), point_mass(4), 2), R(35, 16));
    EXPECT_EQ(deformed_binomial_moment(q_def(), uniform_distribution({0, 1}), 1), R(1, 2));
    for (const auto& d : all_kinds()) {
        for (long r = 1; r <= 5; ++r) EXPECT_EQ(deformed_factorial_moment(d, point_mass(0), r), R(0));
        EXPECT_EQ(deformed_binomial_moment(d, uniform_distribution({0, 2, 3}), 4), R(0));
    }
    EXPECT_THROW(deformed_factorial_moment(q_def(), point_mass(1), -1), NegativeArgument);
}

TEST(MomentsProperty, FactorialMomentIsFactorialTimesBinomialMoment)
{
    for (const auto& d : all_kinds())
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto dist = random_distribution(seed, 12);
            for (long r = 0; r <= 13; ++r)
                EXPECT_EQ(deformed_factorial_moment(d, dist, r), deformed_factorial(d, r) * deformed_binomial_moment(d, dist, r));
        }
}

TEST(Moments, MeanAndVariance)
{
    auto mv = deformed_mean_variance(q_def(), uniform_distribution({0, 1}));
    EXPECT_EQ(mv.mean, R(1, 2));
    EXPECT_EQ(mv.variance, R(1, 4));
    for (const auto& d : all_kinds()) EXPECT_EQ(deformed_mean_variance(d, point_mass(4)).variance, R(0));
    auto u02 = uniform_distribution({0, 2});
    EXPECT_EQ(variance_decomposition(q_def(), u02), deformed_mean_variance(q_def(), u02).variance);
}

TEST(MomentsProperty, VarianceDecomposition)
{
    for (const auto& d : all_kinds())
        for (std::uint64_t seed = 1; seed <= 20; ++seed) {
            auto dist = random_distribution(seed, 12);
            Scalar variance = deformed_mean_variance(d, dist).variance;
            EXPECT_EQ(variance_decomposition(d, dist, 1), variance) << d.describe();
            if (d.unit == 1) EXPECT_EQ(variance_decomposition(d, dist, 0), variance) << d.describe();
        }
}

TEST(Moments, ClassicalBridgeExamples)
{
    EXPECT_EQ(classical_moments_from_deformed(q_def(), point_mass(2), 1).first, R(2));
    EXPECT_EQ(classical_moments_from_deformed(q_def(), uniform_distribution({0, 1, 2}), 2).first, R(1, 3));
    for (long j = 1; j <= 4; ++j) EXPECT_EQ(classical_moments_from_deformed(q_def(), point_mass(0), j).first, R(0));
    EXPECT_THROW(classical_moments_from_deformed(q_def(), point_mass(0), 0), DomainViolation);
}

TEST(MomentsOracle, ClassicalBridgeMatchesDirectMomentsInTheQCase)
{
    for (const auto& d : {q_def(1, 2), q_def(2, 3), q_def(9, 10)})
        for (std::uint64_t seed = 1; seed <= 25; ++seed) {
            auto dist = random_distribution(seed, 12);
            for (long j = 1; j <= 6; ++j)
                for (long tau : {0L, 2L}) {
                    auto [binomial, factorial] = classical_moments_from_deformed(d, dist, j, tau);
                    Scalar expected = direct_binomial_moment(dist, j);
                    EXPECT_EQ(binomial, expected);
                    EXPECT_EQ(factorial, expected * classical_factorial(j));
                }
        }
}

TEST(Moments, InversionExamples)
{
    MomentVector uniform{MomentKind::BINOMIAL, {R(1), R(1, 2)}};
    EXPECT_EQ(distribution_from_binomial_moments(q_def(), uniform), uniform_distribution({0, 1}));
    MomentVector origin{MomentKind::BINOMIAL, {R(1), R(0), R(0)}};
    EXPECT_EQ(distribution_from_binomial_moments(q_def(), origin), point_mass(0));
    MomentVector two = moment_vector(q_def(), point_mass(2), MomentKind::BINOMIAL);
    std::vector<Scalar> g = invert_binomial_moments(q_def(), two);
    EXPECT_EQ(g, (std::vector<Scalar>{R(0), R(0), R(1)}));
}

TEST(Moments, InversionRejectsInconsistentMoments)
{
    MomentVector negative{MomentKind::BINOMIAL, {R(1), R(2)}};
    EXPECT_THROW(distribution_from_binomial_moments(q_def(), negative), InconsistentMoments);
    MomentVector mass{MomentKind::BINOMIAL, {R(2), R(0)}};
    EXPECT_THROW(distribution_from_binomial_moments(q_def(), mass), InconsistentMoments);
    MomentVector factorial{MomentKind::FACTORIAL, {R(1)}};
    EXPECT_THROW(distribution_from_binomial_moments(q_def(), factorial), DomainViolation);
}

TEST(MomentsProperty, InversionRoundTripsForEveryKind)
{
    for (const auto& d : all_kinds())
        for (std::uint64_t seed = 1; seed <= 30; ++seed) {
            auto dist = random_distribution(seed, 12);
            EXPECT_EQ(distribution_from_binomial_moments(d, moment_vector(d, dist, MomentKind::BINOMIAL)), dist)
                << d.describe() << " seed " << seed;
        }
}

TEST(MomentsProperty, DisplayedInversionAgreesWhenEps1IsOne)
{
    for (const auto& d : {q_def(1, 2), q_def(2, 3)})
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto mv = moment_vector(d, random_distribution(seed, 12), MomentKind::BINOMIAL);
            EXPECT_EQ(invert_binomial_moments(d, mv, ClosedForm::DISPLAYED), invert_binomial_moments(d, mv));
        }
}

TEST(Moments, MomentVectorJson)
{
    MomentVector mv = moment_vector(q_def(), uniform_distribution({0, 1}), MomentKind::BINOMIAL);
    std::string text = moment_vector_to_json(mv, -1);
    EXPECT_EQ(text, R"({"kind":"binomial","order":{"0":"1","1":"1/2"}})");
    MomentVector back = parse_moment_vector_json(text);
    EXPECT_EQ(back.values, mv.values);
    EXPECT_THROW(parse_moment_vector_json(R"({"kind":"x","order":{}})"), ParseError);
}
