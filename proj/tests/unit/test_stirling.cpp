#include "support.hpp"

#include <gtest/gtest.h>

using namespace pqcomb;
using namespace pqcomb::testing_support;

namespace {

StirlingConfig cfg(const Deformation& d, long j = 0, long tau = 0) { return StirlingConfig{d, j, tau}; }

}  // namespace

TEST(Stirling, RecursionValues)
{
    EXPECT_EQ(stirling_first(cfg(q_def()), 2, 1), R(-1));
    EXPECT_EQ(stirling_first(cfg(q_def(2, 3), 0, 5), 2, 1), R(-1));
    EXPECT_EQ(stirling_first(cfg(q_def()), 3, 2), R(-5, 2));
    EXPECT_EQ(stirling_second(cfg(q_def()), 3, 2), R(5, 2));
    for (const auto& d : all_kinds()) {
        EXPECT_EQ(stirling_first(cfg(d, 1, 1), 0, 0), R(1));
        EXPECT_EQ(stirling_second(cfg(d, 2, -1), 0, 0), R(1));
        EXPECT_EQ(stirling_first(cfg(d), 4, 5), R(0));
    }
    for (long n = 0; n <= 8; ++n) EXPECT_EQ(stirling_second(cfg(q_def()), n, n), R(1));
}

TEST(Stirling, TableBounds)
{
    StirlingTable t(StirlingKind::SECOND, cfg(q_def()), 4);
    EXPECT_EQ(t.n_max(), 4);
    EXPECT_EQ(t(2, 3), R(0));
    EXPECT_EQ(t(3, -1), R(0));
    EXPECT_THROW(t(5, 1), DomainViolation);
}

TEST(Stirling, ExpansionExamples)
{
    auto a = expand_factorial_in_powers(cfg(q_def()), 2, 3);
    EXPECT_EQ(a.first, R(21, 8));
    EXPECT_EQ(a.second, R(21, 8));
    auto b = expand_factorial_in_powers(cfg(q_def(), 1), 1, 4);
    EXPECT_EQ(b.first, R(7, 4));
    EXPECT_EQ(b.second, R(7, 4));
    auto c = expand_powers_in_factorials(cfg(q_def()), 2, 3);
    EXPECT_EQ(c.first, R(49, 16));
    EXPECT_EQ(c.second, R(49, 16));
    auto e = expand_powers_in_factorials(cfg(q_def()), 3, 2);
    EXPECT_EQ(e.first, R(27, 8));
    EXPECT_EQ(e.second, R(27, 8));
    for (const auto& d : all_kinds()) {
        auto z = expand_factorial_in_powers(cfg(d), 0, 5);
        EXPECT_EQ(z.first, R(1));
        EXPECT_EQ(z.second, R(1));
    }
}

TEST(StirlingProperty, QCaseExpansionsHoldExactly)
{
    for (const auto& d : {q_def(1, 2), q_def(2, 3), q_def(9, 10)})
        for (long j = 0; j <= 2; ++j)
            for (long tau : {0L, 3L})
                for (long n = 0; n <= 8; ++n)
                    for (long x = j; x <= j + 8; ++x) {
                        auto a = expand_factorial_in_powers(cfg(d, j, tau), n, x);
                        EXPECT_EQ(a.first, a.second) << "factorial j=" << j << " n=" << n << " x=" << x;
                        auto b = expand_powers_in_factorials(cfg(d, j, tau), n, x);
                        EXPECT_EQ(b.first, b.second) << "powers j=" << j << " n=" << n << " x=" << x;
                        auto c = expand_shifted_powers_in_factorials(cfg(d, j, tau), n, x);
                        EXPECT_EQ(c.first, c.second) << "shifted j=" << j << " n=" << n << " x=" << x;
                    }
}

TEST(StirlingOracle, QCaseTablesMatchLinearSystemSolution)
{
    for (const auto& d : {q_def(1, 2), q_def(2, 3), q_def(9, 10)})
        for (long j = 0; j <= 2; ++j)
            for (StirlingKind kind : {StirlingKind::FIRST, StirlingKind::SECOND}) {
                StirlingTable t(kind, cfg(d, j), 8);
                EXPECT_EQ(t.rows(), q_stirling_oracle(d, kind, j, 8)) << d.describe() << " j=" << j;
            }
    EXPECT_THROW(q_stirling_oracle(pq_def(R(3, 4), R(1, 2)), StirlingKind::FIRST, 0, 4), DomainViolation);
}

TEST(StirlingProperty, OrthogonalityInTheQCase)
{
    for (const auto& d : {q_def(1, 2), q_def(2, 3)})
        for (long j = 0; j <= 2; ++j) EXPECT_EQ(stirling_orthogonality(cfg(d, j), 8).status(), Status::PASS);
}

TEST(StirlingProperty, OrthogonalityWithoutNoncentralityForEveryKind)
{
    // With j = 0 the two recursions use the same coefficients eps1^{tau-n}[n],
    // so the triangles are inverse for any grading.
    for (const auto& d : all_kinds())
        for (long tau : {-1L, 0L, 2L}) EXPECT_EQ(stirling_orthogonality(cfg(d, 0, tau), 8).status(), Status::PASS);
}

TEST(Stirling, OrthogonalityEntries)
{
    StirlingTable s(StirlingKind::FIRST, cfg(q_def()), 4);
    StirlingTable S(StirlingKind::SECOND, cfg(q_def()), 4);
    Scalar sum = 0;
    for (long m = 0; m <= 2; ++m) sum += s(2, m) * S(m, 0);
    EXPECT_EQ(sum, R(0));
}

TEST(StirlingProperty, GeneratingFunctionMatchesRecursion)
{
    auto check = [](const StirlingConfig& c) {
        for (long k = 0; k <= 6; ++k) {
            PowerSeries g = genfunc_second(c, k, 12);
            for (long n = 0; n <= 12; ++n)
                EXPECT_EQ(g[static_cast<std::size_t>(n)], stirling_second(c, n, k))
                    << c.d.describe() << " j=" << c.j << " tau=" << c.tau << " n=" << n << " k=" << k;
        }
    };
    for (const auto& d : {q_def(1, 2), q_def(2, 3)})
        for (long j = 0; j <= 2; ++j)
            for (long tau : {0L, 1L}) check(cfg(d, j, tau));
    // In general the k = 0 factor (1 - eps1^tau [j] v)^{-1} and the boundary
    // S(n,0) = [j]^n agree when j = 0 or tau = 0.
    for (const auto& d : all_kinds()) {
        check(cfg(d, 0, 2));
        check(cfg(d, 2, 0));
    }
}

TEST(Stirling, GeneratingFunctionLowOrders)
{
    PowerSeries g0 = genfunc_second(cfg(q_def()), 0, 3);
    EXPECT_EQ(g0, PowerSeries({R(1), R(0), R(0), R(0)}, 3));
    PowerSeries g1 = genfunc_second(cfg(q_def()), 1, 3);
    EXPECT_EQ(g1, PowerSeries({R(0), R(1), R(1), R(1)}, 3));
    PowerSeries shifted = genfunc_second(cfg(q_def(), 1), 0, 3);
    EXPECT_EQ(shifted, PowerSeries({R(1), R(1), R(1), R(1)}, 3));
}

TEST(Stirling, ExplicitSumsInTheQCase)
{
    EXPECT_EQ(explicit_stirling(cfg(q_def()), StirlingKind::FIRST, 2, 1, 0), R(-1));
    EXPECT_EQ(explicit_stirling(cfg(q_def()), StirlingKind::SECOND, 2, 2, 0), R(1));
    for (long n = 1; n <= 6; ++n) EXPECT_EQ(explicit_stirling(cfg(q_def()), StirlingKind::FIRST, n, n, 0), R(1));
    for (long r = 0; r <= 2; ++r)
        for (long n = 1; n <= 8; ++n)
            for (long k = 1; k <= n; ++k) {
                EXPECT_EQ(explicit_stirling(cfg(q_def()), StirlingKind::FIRST, n, k, r), stirling_first(cfg(q_def(), r), n, k));
                EXPECT_EQ(explicit_stirling(cfg(q_def()), StirlingKind::SECOND, n, k, r), stirling_second(cfg(q_def(), r), n, k));
            }
}

TEST(Stirling, ClassicalBridgeInTheQCase)
{
    auto [a, b] = classical_binomial_bridge(cfg(q_def()), 3, 1);
    EXPECT_EQ(a.status(), Status::PASS);
    EXPECT_EQ(b.status(), Status::PASS);
    auto [c, e] = classical_binomial_bridge(cfg(q_def()), 4, 2);
    EXPECT_EQ(c.status(), Status::PASS);
    EXPECT_EQ(e.status(), Status::PASS);
    for (long K = 1; K <= 8; ++K) {
        auto [x, y] = classical_binomial_bridge(cfg(q_def(2, 3)), K, K);
        EXPECT_EQ(x.status(), Status::PASS);
        EXPECT_EQ(y.status(), Status::PASS);
    }
}

TEST(Stirling, SpecialColumns)
{
    EXPECT_EQ(special_first_column(cfg(q_def()), 3, 1), R(3, 2));
    EXPECT_EQ(special_first_column(cfg(q_def()), 1, 1), R(1));
    EXPECT_EQ(special_first_column(cfg(q_def()), 3, 2), R(-5, 2));
    EXPECT_THROW(special_first_column(cfg(q_def()), 0, 1), DomainViolation);
}

TEST(StirlingProperty, CertifiedSpecialColumnsMatchRecursionForEveryKind)
{
    for (const auto& d : all_kinds())
        for (long tau : {-1L, 0L, 1L, 2L}) {
            StirlingConfig c = cfg(d, 0, tau);
            for (long u = 1; u <= 8; ++u) EXPECT_EQ(special_first_column(c, u, 1), stirling_first(c, u, 1));
            for (long u = 2; u <= 8; ++u) EXPECT_EQ(special_first_column(c, u, 2), stirling_first(c, u, 2));
        }
}

TEST(StirlingProperty, DisplayedSpecialColumnsAgreeWhenEps1IsOne)
{
    for (const auto& d : {q_def(1, 2), q_def(2, 3)})
        for (long u = 2; u <= 8; ++u)
            for (int col : {1, 2})
                EXPECT_EQ(special_first_column(cfg(d), u, col, ClosedForm::DISPLAYED),
                          special_first_column(cfg(d), u, col, ClosedForm::CERTIFIED));
}

TEST(Stirling, SignlessValues)
{
    for (const auto& d : all_kinds()) {
        EXPECT_EQ(signless_first(cfg(d), 0, 0), R(1));
        for (long n = 0; n <= 6; ++n) EXPECT_EQ(signless_first(cfg(d, 1), n, n), R(1));
    }
    EXPECT_EQ(signless_first(cfg(q_def()), 2, 1), R(1));
    for (const auto& d : unit_one_kinds())
        for (long n = 0; n <= 8; ++n)
            for (long k = 0; k <= n; ++k)
                EXPECT_EQ(signless_first(cfg(d, 1), n, k), abs(stirling_first(cfg(d, 1), n, k)));
}

TEST(Stirling, ReciprocalExpansionsConvergeInTheQCase)
{
    auto [powers, factorials] = reciprocal_expansions(cfg(q_def(), 0), 1, 3);
    EXPECT_EQ(powers.status(), Status::PASS);
    EXPECT_EQ(powers.mode, Mode::NUMERIC);
    (void)factorials;
    EXPECT_THROW(reciprocal_expansion(cfg(q_def()), ReciprocalSeries::POWERS, 1, 1), DomainViolation);
    EXPECT_THROW(reciprocal_expansion(cfg(q_def(), 2), ReciprocalSeries::FACTORIALS, 0, 2), DomainViolation);
}

TEST(Stirling, AuditCoversEveryStatement)
{
    auto reports = stirling_audit(q_def());
    ASSERT_FALSE(reports.empty());
    for (const auto& r : reports) {
        if (r.status() == Status::FAIL) EXPECT_FALSE(r.result.counterexamples.empty()) << r.identity;
    }
    auto find = [&](const std::string& id) {
        for (const auto& r : reports)
            if (r.identity == id) return r.status();
        ADD_FAILURE() << "missing " << id;
        return Status::SKIPPED;
    };
    EXPECT_EQ(find("STIRLING_ORACLE"), Status::PASS);
    EXPECT_EQ(find("STIRLING_ORTHO"), Status::PASS);
    EXPECT_EQ(find("GENFUNC_SECOND"), Status::PASS);
    EXPECT_EQ(find("EXPANSION_FACTORIAL"), Status::PASS);
    EXPECT_EQ(find("EXPANSION_POWERS"), Status::PASS);
    EXPECT_EQ(find("RECIPROCAL_POWERS"), Status::PASS);
}
