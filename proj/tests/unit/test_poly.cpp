#include "support.hpp"

#include <gtest/gtest.h>

using namespace pqcomb;
using namespace pqcomb::testing_support;

namespace {

Polynomial P(std::vector<Scalar> c) { return Polynomial(std::move(c)); }

}  // namespace

TEST(Polynomial, Arithmetic)
{
    Polynomial a = P({R(1), R(1)});
    Polynomial b = P({R(1), R(2)});
    EXPECT_EQ(poly_arith(a, b, PolyOp::mul), P({R(1), R(3), R(2)}));
    EXPECT_EQ(poly_arith(a, Polynomial(), PolyOp::add), a);
    Polynomial zero = poly_arith(a, a, PolyOp::sub);
    EXPECT_TRUE(zero.is_zero());
    EXPECT_EQ(zero.degree(), -1);
}

TEST(Polynomial, TrimsTrailingZeros)
{
    Polynomial p = P({R(1), R(0), R(0)});
    EXPECT_EQ(p.degree(), 0);
    EXPECT_EQ(p, Polynomial::constant(R(1)));
    EXPECT_EQ(Polynomial::monomial(R(0), 5).degree(), -1);
}

TEST(Polynomial, Evaluation)
{
    Polynomial p = P({R(1), R(3), R(2)});
    EXPECT_EQ(poly_eval(p, R(1)), R(6));
    EXPECT_EQ(poly_eval(p, R(0)), R(1));
    EXPECT_EQ(poly_eval(P({R(1), R(3, 2), R(1, 2)}), R(2)), R(6));
}

TEST(Polynomial, EvaluationDistributesOverArithmetic)
{
    Polynomial a = P({R(2, 3), R(-1), R(5, 7)});
    Polynomial b = P({R(-4), R(0), R(1, 2), R(3)});
    for (const Scalar& x : {R(0), R(1), R(-2), R(3, 5), R(-7, 4)}) {
        EXPECT_EQ(poly_eval(a + b, x), poly_eval(a, x) + poly_eval(b, x));
        EXPECT_EQ(poly_eval(a - b, x), poly_eval(a, x) - poly_eval(b, x));
        EXPECT_EQ(poly_eval(a * b, x), poly_eval(a, x) * poly_eval(b, x));
    }
}

TEST(Polynomial, LinearFactorProducts)
{
    EXPECT_EQ(product_linear_factors(q_def(), 2), P({R(1), R(3, 2), R(1, 2)}));
    EXPECT_EQ(product_linear_factors(q_def(), 0), Polynomial::constant(R(1)));
    for (const auto& d : all_kinds()) EXPECT_EQ(product_linear_factors(d, 1), P({R(1), R(1)}));
}

TEST(PolynomialProperty, LinearFactorCoefficientsAreWeightedBinomials)
{
    for (const auto& d : all_kinds())
        for (long n = 0; n <= 12; ++n) {
            Polynomial p = product_linear_factors(d, n);
            ASSERT_EQ(p.degree(), n);
            for (long k = 0; k <= n; ++k)
                EXPECT_EQ(p.coefficient(static_cast<std::size_t>(k)),
                          pow(d.eps1, choose2(n - k)) * pow(d.eps2, choose2(k)) * deformed_binomial(d, n, k))
                    << d.describe() << " n=" << n << " k=" << k;
        }
}

TEST(PowerSeries, GeometricReciprocal)
{
    PowerSeries one_minus_x({R(1), R(-1), R(0), R(0)}, 3);
    PowerSeries inv = one_minus_x.reciprocal();
    EXPECT_EQ(inv, PowerSeries({R(1), R(1), R(1), R(1)}, 3));
}

TEST(PowerSeries, ReciprocalOfQuadratic)
{
    PowerSeries s({R(1), R(-3, 2), R(1, 2)}, 2);
    EXPECT_EQ(s.reciprocal(), PowerSeries({R(1), R(3, 2), R(7, 4)}, 2));
}

TEST(PowerSeries, MultiplicativeIdentityAndErrors)
{
    PowerSeries a({R(2), R(-1, 3), R(5), R(7, 2)}, 3);
    PowerSeries one({R(1), R(0), R(0), R(0)}, 3);
    EXPECT_EQ(series_arith(a, one, SeriesOp::mul), a);
    PowerSeries zero_constant({R(0), R(1), R(0), R(0)}, 3);
    EXPECT_THROW(zero_constant.reciprocal(), NonInvertibleSeries);
    EXPECT_THROW(series_arith(a, zero_constant, SeriesOp::reciprocal_of_b_then_mul), NonInvertibleSeries);
}

TEST(PowerSeriesProperty, ReciprocalTimesSeriesIsOne)
{
    for (std::size_t order : {0u, 1u, 5u, 16u}) {
        std::vector<Scalar> c(order + 1);
        for (std::size_t i = 0; i <= order; ++i) c[i] = R(static_cast<long>(3 * i + 1), static_cast<long>(i + 2)) * (i % 2 ? -1 : 1);
        PowerSeries s(c, order);
        PowerSeries product = s * s.reciprocal();
        PowerSeries one(order);
        one[0] = 1;
        EXPECT_EQ(product, one);
        EXPECT_EQ(series_arith(s, s, SeriesOp::reciprocal_of_b_then_mul), one);
    }
}

TEST(PowerSeries, MixedOrdersTruncateToTheSmaller)
{
    PowerSeries a({R(1), R(1), R(1), R(1), R(1)}, 4);
    PowerSeries b({R(1), R(1)}, 1);
    EXPECT_EQ((a + b).order(), 1u);
    EXPECT_EQ((a * b).order(), 1u);
}
