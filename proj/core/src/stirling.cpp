#include "pqcomb/stirling.hpp"

#include "pqcomb/errors.hpp"

#include <optional>
#include <string>

namespace pqcomb {

namespace {

long sgn(long e) { return (e % 2 == 0) ? 1 : -1; }

Scalar first_boundary(const StirlingConfig& c, long n)
{
    if (n == 0) return Scalar(1);
    return pow(c.d.eps2, choose2(n) + c.j * n) * ordered_factorial(c.d, -c.j, n);
}

Scalar second_boundary(const StirlingConfig& c, long n)
{
    if (n == 0) return Scalar(1);
    return pow(number(c.d, c.j), n);
}

StirlingConfig with(const StirlingConfig& base, long j, long tau)
{
    StirlingConfig c = base;
    c.j = j;
    c.tau = tau;
    return c;
}

// Exact Gaussian elimination for a square nonsingular system.
std::vector<Scalar> solve(std::vector<std::vector<Scalar>> a, std::vector<Scalar> b)
{
    std::size_t n = b.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw DomainViolation("singular oracle system");
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Scalar f = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Scalar> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

struct SeriesCell {
    Scalar lhs;
    std::optional<Scalar> rhs;  // empty when a term has a zero denominator
    long undefined_at = -1;
};

// Partial sum of one reciprocal series over `horizon` terms starting at n = k,
// with noncentrality x = cfg.j and grading r = cfg.tau.
SeriesCell reciprocal_cell(const StirlingConfig& cfg, ReciprocalSeries which, long k, long t, long horizon)
{
    const Deformation& d = cfg.d;
    long x = cfg.j, r = cfg.tau;
    Scalar T = number(d, t);
    // falling[n] = prod_{i=0..n} [t-x-i] for n = 0..k+horizon-1.
    std::vector<Scalar> falling;
    falling.reserve(static_cast<std::size_t>(k + horizon));
    Scalar den = 1;
    for (long n = 0; n < k + horizon; ++n) {
        den *= number(d, t - x - n);
        falling.push_back(den);
    }
    SeriesCell cell;
    if (which == ReciprocalSeries::FACTORIALS) {
        for (long n = k; n < k + horizon; ++n)
            if (falling[static_cast<std::size_t>(n)] == 0) {
                cell.lhs = pow(d.eps1, t * k - (r + x) * k) / pow(T, k + 1);
                cell.undefined_at = n;
                return cell;
            }
    }
    StirlingTable table(which == ReciprocalSeries::POWERS ? StirlingKind::SECOND : StirlingKind::FIRST, cfg,
                        k + horizon);
    Scalar step = pow(d.eps1, t - r - x);
    Scalar grade = pow(step, k);
    Scalar s = 0;
    if (which == ReciprocalSeries::POWERS) {
        cell.lhs = grade / falling[static_cast<std::size_t>(k)];
        Scalar front = pow(d.eps2, choose2(k + 1) + x * (k + 1));
        Scalar inv_T = 1 / T;
        Scalar power = pow(inv_T, k + 1);
        for (long n = k; n < k + horizon; ++n) {
            s += front * table(n, k) * grade * power;
            grade *= step;
            power *= inv_T;
        }
    } else {
        cell.lhs = grade / pow(T, k + 1);
        for (long n = k; n < k + horizon; ++n) {
            s += pow(d.eps2, -choose2(n + 1) - x * (n + 1)) * table(n, k) * grade / falling[static_cast<std::size_t>(n)];
            grade *= step;
        }
    }
    cell.rhs = s;
    return cell;
}

void tally_series(FormTally& tally, const Params& params, const SeriesCell& cell, const NumericOptions& numeric)
{
    if (!cell.rhs) {
        tally.fail(params, to_string(cell.lhs), "undefined: zero denominator in term n=" + std::to_string(cell.undefined_at));
        return;
    }
    if (within_relative(cell.lhs, *cell.rhs, numeric.tolerance)) {
        tally.pass();
        return;
    }
    Params p = params;
    p.emplace_back("relative_error", to_decimal(relative_error(cell.lhs, *cell.rhs)));
    tally.fail(p, cell.lhs, *cell.rhs);
}

Scalar first_bridge_weight(const Deformation& d, const Scalar& s_mj, long m, long j, long x)
{
    return Scalar(sgn(m - j)) * pow(d.eps1 - d.eps2, m - j) * pow(d.eps1, choose2(m) - x * (m - j)) * s_mj;
}

Scalar bridge_first_rhs(const StirlingTable& s, const Deformation& d, long K, long j, long x)
{
    Scalar sum = 0;
    for (long m = j; m <= K; ++m)
        sum += first_bridge_weight(d, s(m, j), m, j, x) * deformed_binomial(d, K, m);
    return sum;
}

Scalar bridge_second_rhs(const StirlingTable& S, const Deformation& d, long K, long j, long x)
{
    Scalar sum = 0;
    for (long m = j; m <= K; ++m)
        sum += Scalar(sgn(m - j)) * pow(d.eps1 - d.eps2, m - j) * pow(d.eps1, -choose2(j) - x * (m - j)) * S(m, j) *
               classical_binomial(K, m);
    return sum;
}

bool series_converges(const Deformation& d) { return abs(d.eps2) < abs(d.eps1); }

void orthogonality_cells(FormTally& tally, const StirlingConfig& cfg, long n_max)
{
    StirlingTable s(StirlingKind::FIRST, cfg, n_max);
    StirlingTable S(StirlingKind::SECOND, cfg, n_max);
    for (long n = 0; n <= n_max; ++n) {
        for (long k = 0; k <= n_max; ++k) {
            Scalar a = 0, b = 0;
            for (long m = 0; m <= n_max; ++m) {
                a += s(n, m) * S(m, k);
                b += S(n, m) * s(m, k);
            }
            Scalar delta(n == k ? 1 : 0);
            tally.compare({{"j", cfg.j}, {"tau", cfg.tau}, {"n", n}, {"k", k}, {"product", std::string("s*S")}}, delta, a);
            tally.compare({{"j", cfg.j}, {"tau", cfg.tau}, {"n", n}, {"k", k}, {"product", std::string("S*s")}}, delta, b);
        }
    }
}

}  // namespace

StirlingTable::StirlingTable(StirlingKind kind, StirlingConfig cfg, long n_max) : kind_(kind), cfg_(std::move(cfg))
{
    if (n_max < 0) throw NegativeArgument("table size " + std::to_string(n_max));
    const Deformation& d = cfg_.d;
    rows_.reserve(static_cast<std::size_t>(n_max) + 1);
    rows_.push_back({Scalar(1)});
    for (long n = 0; n < n_max; ++n) {
        const auto& prev = rows_.back();
        std::vector<Scalar> row(static_cast<std::size_t>(n) + 2);
        row[0] = kind_ == StirlingKind::FIRST ? first_boundary(cfg_, n + 1) : second_boundary(cfg_, n + 1);
        Scalar first_coef = pow(d.eps1, cfg_.tau - n - cfg_.j) * number(d, n + cfg_.j);
        for (long k = 1; k <= n + 1; ++k) {
            Scalar stay = k <= n ? prev[static_cast<std::size_t>(k)] : Scalar(0);
            const Scalar& down = prev[static_cast<std::size_t>(k - 1)];
            if (kind_ == StirlingKind::FIRST)
                row[static_cast<std::size_t>(k)] = down - first_coef * stay;
            else
                row[static_cast<std::size_t>(k)] = down + pow(d.eps1, cfg_.tau - k) * number(d, k + cfg_.j) * stay;
        }
        rows_.push_back(std::move(row));
    }
}

Scalar StirlingTable::operator()(long n, long k) const
{
    if (n < 0 || n > n_max()) throw DomainViolation("row " + std::to_string(n) + " outside table of " + std::to_string(n_max()));
    if (k < 0 || k > n) return Scalar(0);
    return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

Scalar stirling_first(const StirlingConfig& cfg, long n, long k)
{
    if (n < 0) throw NegativeArgument("n = " + std::to_string(n));
    return StirlingTable(StirlingKind::FIRST, cfg, n)(n, k);
}

Scalar stirling_second(const StirlingConfig& cfg, long n, long k)
{
    if (n < 0) throw NegativeArgument("n = " + std::to_string(n));
    return StirlingTable(StirlingKind::SECOND, cfg, n)(n, k);
}

std::pair<Scalar, Scalar> expand_factorial_in_powers(const StirlingConfig& cfg, long n, long x)
{
    StirlingTable s(StirlingKind::FIRST, cfg, n);
    Scalar sum = 0, bx = number(cfg.d, x);
    for (long k = 0; k <= n; ++k) sum += s(n, k) * pow(bx, k);
    return {ordered_factorial(cfg.d, x - cfg.j, n), pow(cfg.d.eps2, -choose2(n) - cfg.j * n) * sum};
}

std::pair<Scalar, Scalar> expand_powers_in_factorials(const StirlingConfig& cfg, long n, long x)
{
    StirlingTable S(StirlingKind::SECOND, cfg, n);
    Scalar sum = 0;
    for (long k = 0; k <= n; ++k)
        sum += pow(cfg.d.eps2, choose2(k) + cfg.j * k) * S(n, k) * ordered_factorial(cfg.d, x - cfg.j, k);
    return {pow(number(cfg.d, x), n), sum};
}

std::pair<Scalar, Scalar> expand_shifted_powers_in_factorials(const StirlingConfig& cfg, long n, long x)
{
    StirlingTable S(StirlingKind::SECOND, cfg, n);
    Scalar sum = 0;
    for (long k = 0; k <= n; ++k) sum += pow(cfg.d.eps2, choose2(k) + cfg.j * k) * S(n, k) * ordered_factorial(cfg.d, x, k);
    return {pow(number(cfg.d, x + cfg.j), n), sum};
}

CheckReport stirling_orthogonality(const StirlingConfig& cfg, long n_max)
{
    FormTally tally;
    orthogonality_cells(tally, cfg, n_max);
    return make_report("STIRLING_ORTHO", "s13/s14", Mode::EXACT, cfg.d.describe(), tally);
}

Scalar explicit_stirling(const StirlingConfig& cfg, StirlingKind kind, long n, long k, long r)
{
    if (n < 1 || k < 1 || k > n)
        throw DomainViolation("explicit formula needs n >= 1 and 1 <= k <= n, got n=" + std::to_string(n) +
                              " k=" + std::to_string(k));
    const Deformation& d = cfg.d;
    long x = cfg.tau;
    Scalar diff = d.eps1 - d.eps2;
    Scalar sum = 0;
    if (kind == StirlingKind::FIRST) {
        for (long i = k; i <= n; ++i)
            sum += Scalar(sgn(i - k)) * pow(d.eps1, choose2(i) - r * (n - i) - k * x) *
                   pow(d.eps2, choose2(n - i) + r * (n - i)) * deformed_binomial(d, n, i) * classical_binomial(i, k);
        return pow(d.eps1, -choose2(n) + n * x) / pow(diff, n - k) * sum;
    }
    for (long i = k; i <= n; ++i)
        sum += Scalar(sgn(i - k)) * pow(d.eps1, (n - i) * r + choose2(k) - k * x) * pow(d.eps2, r * (i - k)) *
               classical_binomial(n, i) * deformed_binomial(d, i, k);
    return pow(d.eps1, n * x) / pow(diff, n - k) * sum;
}

PowerSeries genfunc_second(const StirlingConfig& cfg, long k, std::size_t order)
{
    if (k < 0) throw NegativeArgument("column " + std::to_string(k));
    PowerSeries g({Scalar(1)}, order);
    for (long i = 0; i <= k; ++i) {
        PowerSeries factor({Scalar(1), -pow(cfg.d.eps1, cfg.tau - i) * number(cfg.d, cfg.j + i)}, order);
        g = g * factor.reciprocal();
    }
    return g.shifted(static_cast<std::size_t>(k));
}

CheckReport reciprocal_expansion(const StirlingConfig& cfg, ReciprocalSeries which, long k, long t,
                                 const NumericOptions& numeric, bool enforce_domain)
{
    if (k < 0) throw NegativeArgument("column " + std::to_string(k));
    if (enforce_domain && t <= k + cfg.j)
        throw DomainViolation("reciprocal expansion needs t > k + x, got t=" + std::to_string(t) + " k=" +
                              std::to_string(k) + " x=" + std::to_string(cfg.j));
    if (numeric.horizon < 1) throw DomainViolation("numeric horizon must be positive");
    FormTally tally;
    Params params{{"k", k}, {"x", cfg.j}, {"tau", cfg.tau}, {"t", t}};
    tally_series(tally, params, reciprocal_cell(cfg, which, k, t, numeric.horizon), numeric);
    bool powers = which == ReciprocalSeries::POWERS;
    return make_report(powers ? "RECIPROCAL_POWERS" : "RECIPROCAL_FACTORIALS", powers ? "s31" : "s32", Mode::NUMERIC,
                       cfg.d.describe(), tally);
}

std::pair<CheckReport, CheckReport> reciprocal_expansions(const StirlingConfig& cfg, long k, long t,
                                                          const NumericOptions& numeric)
{
    return {reciprocal_expansion(cfg, ReciprocalSeries::POWERS, k, t, numeric),
            reciprocal_expansion(cfg, ReciprocalSeries::FACTORIALS, k, t, numeric)};
}

std::pair<CheckReport, CheckReport> classical_binomial_bridge(const StirlingConfig& cfg, long K, long j)
{
    if (K < 1 || j < 1) throw DomainViolation("bridge needs K, j >= 1");
    StirlingTable s(StirlingKind::FIRST, cfg, K);
    StirlingTable S(StirlingKind::SECOND, cfg, K);
    Params params{{"K", K}, {"j", j}, {"tau", cfg.tau}};
    FormTally a, b;
    a.compare(params, classical_binomial(K, j), bridge_first_rhs(s, cfg.d, K, j, cfg.tau));
    b.compare(params, deformed_binomial(cfg.d, K, j), bridge_second_rhs(S, cfg.d, K, j, cfg.tau));
    return {make_report("BRIDGE_FIRST", "s33", Mode::EXACT, cfg.d.describe(), a),
            make_report("BRIDGE_SECOND", "s33b", Mode::EXACT, cfg.d.describe(), b)};
}

Scalar special_first_column(const StirlingConfig& cfg, long u, int column, ClosedForm form)
{
    const Deformation& d = cfg.d;
    long x = cfg.tau;
    if (column == 1) {
        if (u < 1) throw DomainViolation("column 1 needs u >= 1");
        long e = form == ClosedForm::CERTIFIED ? x * (u - 1) - choose2(u) : x * u - (u - 1) * (u + 2) / 2;
        return Scalar(sgn(u - 1)) * pow(d.eps1, e) * deformed_factorial(d, u - 1);
    }
    if (column == 2) {
        if (u < 2) throw DomainViolation("column 2 needs u >= 2");
        Scalar zeta = 0;
        if (form == ClosedForm::CERTIFIED) {
            for (long i = 1; i <= u - 1; ++i) zeta += pow(d.eps1, i - x) / number(d, i);
            return Scalar(sgn(u)) * pow(d.eps1, x * (u - 1) - choose2(u)) * deformed_factorial(d, u - 1) * zeta;
        }
        for (long i = 1; i <= u - 1; ++i) zeta += pow(d.eps1, (i - 1) * (x + 1)) / number(d, i);
        return Scalar(sgn(u - 2)) * pow(d.eps1, x * (u - 2) - (u - 2) * (u + 3) / 2) * deformed_factorial(d, u - 1) * zeta;
    }
    throw DomainViolation("closed forms exist for columns 1 and 2 only");
}

Scalar signless_first(const StirlingConfig& cfg, long n, long k)
{
    if (n < 0) throw NegativeArgument("n = " + std::to_string(n));
    if (k < 0 || k > n) return Scalar(0);
    return pow(-cfg.d.unit, k - n) * stirling_first(cfg, n, k);
}

std::vector<std::vector<Scalar>> q_stirling_oracle(const Deformation& d, StirlingKind kind, long j, long n_max)
{
    if (d.eps1 != 1) throw DomainViolation("the q-case oracle needs eps1 = 1");
    if (n_max < 0) throw NegativeArgument("n_max = " + std::to_string(n_max));
    std::vector<std::vector<Scalar>> rows;
    for (long n = 0; n <= n_max; ++n) {
        std::size_t m = static_cast<std::size_t>(n) + 1;
        if (kind == StirlingKind::SECOND) {
            // [x+j]^n = sum_k eps2^{C(k,2)+jk} S(n,k) [x]_k is triangular at x = 0..n.
            std::vector<Scalar> row(m);
            for (long x = 0; x <= n; ++x) {
                Scalar rest = pow(number(d, x + j), n);
                for (long k = 0; k < x; ++k)
                    rest -= pow(d.eps2, choose2(k) + j * k) * row[static_cast<std::size_t>(k)] * ordered_factorial(d, x, k);
                row[static_cast<std::size_t>(x)] = rest / (pow(d.eps2, choose2(x) + j * x) * ordered_factorial(d, x, x));
            }
            rows.push_back(std::move(row));
        } else {
            // sum_k s(n,k) [x]^k = eps2^{C(n,2)+jn} [x-j]_n is a Vandermonde system in [x].
            std::vector<std::vector<Scalar>> a(m, std::vector<Scalar>(m));
            std::vector<Scalar> b(m);
            for (long x = 0; x <= n; ++x) {
                Scalar bx = number(d, x);
                for (long k = 0; k <= n; ++k) a[static_cast<std::size_t>(x)][static_cast<std::size_t>(k)] = pow(bx, k);
                b[static_cast<std::size_t>(x)] = pow(d.eps2, choose2(n) + j * n) * ordered_factorial(d, x - j, n);
            }
            rows.push_back(solve(std::move(a), std::move(b)));
        }
    }
    return rows;
}

std::vector<CheckReport> stirling_audit(const Deformation& d, const NumericOptions& numeric)
{
    std::vector<CheckReport> out;
    const std::string desc = d.describe();
    StirlingConfig base{d, 0, 0};
    const long N = 8;

    {
        FormTally t;
        std::vector<std::string> notes;
        if (d.eps1 == 1) {
            for (long j = 0; j <= 2; ++j) {
                for (auto kind : {StirlingKind::FIRST, StirlingKind::SECOND}) {
                    StirlingTable table(kind, with(base, j, 0), N);
                    auto oracle = q_stirling_oracle(d, kind, j, N);
                    for (long n = 0; n <= N; ++n)
                        for (long k = 0; k <= n; ++k)
                            t.compare({{"kind", std::string(kind == StirlingKind::FIRST ? "first" : "second")}, {"j", j}, {"n", n}, {"k", k}},
                                      oracle[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)], table(n, k));
                }
            }
        } else {
            notes.push_back("the linear-system oracle is defined for eps1 = 1 only");
        }
        out.push_back(make_report("STIRLING_ORACLE", "qsns/qsnf", Mode::EXACT, desc, t, nullptr, notes));
    }

    {
        FormTally t;
        for (long j = 0; j <= 2; ++j)
            for (long tau : {0L, 1L, 3L}) orthogonality_cells(t, with(base, j, tau), N);
        out.push_back(make_report("STIRLING_ORTHO", "s13/s14", Mode::EXACT, desc, t, nullptr,
                                  {"tables share j and tau; the boundary columns make the pair inverse only for j = 0 unless eps1 = 1"}));
    }

    {
        FormTally t4, t5, t6;
        for (long j = 0; j <= 2; ++j)
            for (long x = j; x <= j + 8; ++x) {
                StirlingConfig c = with(base, j, x);
                for (long n = 0; n <= N; ++n) {
                    Params p{{"j", j}, {"x", x}, {"n", n}};
                    auto [a4, b4] = expand_factorial_in_powers(c, n, x);
                    t4.compare(p, a4, b4);
                    auto [a5, b5] = expand_powers_in_factorials(c, n, x);
                    t5.compare(p, a5, b5);
                    auto [a6, b6] = expand_shifted_powers_in_factorials(c, n, x);
                    t6.compare(p, a6, b6);
                }
            }
        std::vector<std::string> notes{"grading tau set equal to x"};
        out.push_back(make_report("EXPANSION_FACTORIAL", "s4", Mode::EXACT, desc, t4, nullptr, notes));
        out.push_back(make_report("EXPANSION_POWERS", "s5", Mode::EXACT, desc, t5, nullptr, notes));
        out.push_back(make_report("EXPANSION_SHIFTED", "s6", Mode::EXACT, desc, t6, nullptr, notes));
    }

    {
        FormTally t;
        const long order = 12;
        for (long j = 0; j <= 2; ++j)
            for (long tau : {0L, 1L}) {
                StirlingConfig c = with(base, j, tau);
                StirlingTable S(StirlingKind::SECOND, c, order);
                for (long k = 0; k <= order; ++k) {
                    PowerSeries g = genfunc_second(c, k, static_cast<std::size_t>(order));
                    for (long n = k; n <= order; ++n)
                        t.compare({{"j", j}, {"tau", tau}, {"k", k}, {"n", n}}, S(n, k), g[static_cast<std::size_t>(n)]);
                }
            }
        out.push_back(make_report("GENFUNC_SECOND", "s25", Mode::EXACT, desc, t, nullptr,
                                  {"the k = 0 factor carries eps1^tau while the boundary column is [j]^n"}));
    }

    {
        FormTally t48, t49;
        for (long r = 0; r <= 2; ++r)
            for (long x : {0L, 1L, 3L}) {
                StirlingConfig c = with(base, r, x);
                StirlingTable s(StirlingKind::FIRST, c, N);
                StirlingTable S(StirlingKind::SECOND, c, N);
                for (long n = 1; n <= N; ++n)
                    for (long k = 1; k <= n; ++k) {
                        Params p{{"r", r}, {"x", x}, {"n", n}, {"k", k}};
                        t48.compare(p, s(n, k), explicit_stirling(c, StirlingKind::FIRST, n, k, r));
                        t49.compare(p, S(n, k), explicit_stirling(c, StirlingKind::SECOND, n, k, r));
                    }
            }
        out.push_back(make_report("EXPLICIT_FIRST", "s48", Mode::EXACT, desc, t48, nullptr, {"evaluated as displayed"}));
        out.push_back(make_report("EXPLICIT_SECOND", "s49", Mode::EXACT, desc, t49, nullptr, {"evaluated as displayed"}));
    }

    {
        FormTally ta, tb;
        for (long x : {0L, 1L, 2L}) {
            StirlingConfig c = with(base, 0, x);
            StirlingTable s(StirlingKind::FIRST, c, N);
            StirlingTable S(StirlingKind::SECOND, c, N);
            for (long K = 1; K <= N; ++K)
                for (long j = 1; j <= K; ++j) {
                    Params p{{"K", K}, {"j", j}, {"tau", x}};
                    ta.compare(p, classical_binomial(K, j), bridge_first_rhs(s, d, K, j, x));
                    tb.compare(p, deformed_binomial(d, K, j), bridge_second_rhs(S, d, K, j, x));
                }
        }
        out.push_back(make_report("BRIDGE_FIRST", "s33", Mode::EXACT, desc, ta, nullptr, {"evaluated as displayed"}));
        out.push_back(make_report("BRIDGE_SECOND", "s33b", Mode::EXACT, desc, tb, nullptr, {"evaluated as displayed"}));
    }

    for (int column : {1, 2}) {
        FormTally certified, displayed;
        for (long tau : {-1L, 0L, 1L, 2L}) {
            StirlingConfig c = with(base, 0, tau);
            StirlingTable s(StirlingKind::FIRST, c, N);
            for (long u = column; u <= N; ++u) {
                Params p{{"tau", tau}, {"u", u}};
                certified.compare(p, s(u, column), special_first_column(c, u, column, ClosedForm::CERTIFIED));
                displayed.compare(p, s(u, column), special_first_column(c, u, column, ClosedForm::DISPLAYED));
            }
        }
        out.push_back(make_report(column == 1 ? "SPECIAL_COLUMN_1" : "SPECIAL_COLUMN_2", column == 1 ? "sf1" : "sf2",
                                  Mode::EXACT, desc, certified, &displayed,
                                  {"certified eps1 exponent tau(u-1)-C(u,2); the displayed exponent agrees only when eps1 = 1"}));
    }

    {
        FormTally t;
        for (long j = 0; j <= 2; ++j)
            for (long tau : {0L, 1L}) {
                StirlingConfig c = with(base, j, tau);
                StirlingTable s(StirlingKind::FIRST, c, N);
                for (long n = 0; n <= N; ++n)
                    for (long k = 0; k <= n; ++k) {
                        Scalar v = pow(-d.unit, k - n) * s(n, k);
                        Scalar a = abs(s(n, k));
                        Params p{{"j", j}, {"tau", tau}, {"n", n}, {"k", k}};
                        if (v == a)
                            t.pass();
                        else if (v == pow(d.unit, k - n) * a)
                            t.pass_corrected();
                        else
                            t.fail(p, a, v);
                    }
            }
        out.push_back(make_report("SIGNLESS_FIRST", "s8", Mode::EXACT, desc, t, nullptr,
                                  {"signless values (-unit)^{k-n} s(n,k) compared with |s(n,k)|"}));
    }

    {
        // Sample points where 64 terms reach the tolerance: k + x <= 1.
        FormTally t31, t32;
        std::vector<std::string> n31, n32{"for integer t > k + x the factor [t-x-i] vanishes at i = t-x, so terms n >= t-x are undefined"};
        if (!series_converges(d)) {
            n31.push_back("needs |eps2| < |eps1|");
            n32.push_back("needs |eps2| < |eps1|");
        }
        struct Sample {
            long k, x, tau;
        };
        const Sample samples[] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}};
        for (const Sample& sm : samples)
            for (long dt = 1; dt <= 3; ++dt) {
                long t = sm.k + sm.x + dt;
                Params p{{"k", sm.k}, {"x", sm.x}, {"tau", sm.tau}, {"t", t}};
                if (!series_converges(d)) {
                    t31.skip();
                    t32.skip();
                    continue;
                }
                StirlingConfig c = with(base, sm.x, sm.tau);
                tally_series(t31, p, reciprocal_cell(c, ReciprocalSeries::POWERS, sm.k, t, numeric.horizon), numeric);
                tally_series(t32, p, reciprocal_cell(c, ReciprocalSeries::FACTORIALS, sm.k, t, numeric.horizon), numeric);
            }
        out.push_back(make_report("RECIPROCAL_POWERS", "s31", Mode::NUMERIC, desc, t31, nullptr, n31));
        out.push_back(make_report("RECIPROCAL_FACTORIALS", "s32", Mode::NUMERIC, desc, t32, nullptr, n32));
    }

    {
        // The same series on negative t, where every denominator is nonzero.
        FormTally t;
        std::vector<std::string> notes{"t < 0 with x = 0; outside the stated domain, reported for comparison"};
        if (!series_converges(d)) notes.push_back("needs |eps2| < |eps1|");
        for (long k = 0; k <= 2; ++k)
            for (long t0 : {-1L, -2L, -4L, -8L}) {
                Params p{{"k", k}, {"x", 0L}, {"tau", 0L}, {"t", t0}};
                if (!series_converges(d)) {
                    t.skip();
                    continue;
                }
                tally_series(t, p, reciprocal_cell(base, ReciprocalSeries::FACTORIALS, k, t0, numeric.horizon), numeric);
            }
        out.push_back(make_report("RECIPROCAL_FACTORIALS_NEGATIVE_T", "s32", Mode::NUMERIC, desc, t, nullptr, notes));
    }
    return out;
}

Scalar classical_bridge_weight(const StirlingTable& s, long m, long j)
{
    if (s.kind() != StirlingKind::FIRST) throw DomainViolation("bridge weights use the first kind table");
    return first_bridge_weight(s.config().d, s(m, j), m, j, s.config().tau);
}

}  // namespace pqcomb
