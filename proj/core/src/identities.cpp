#include "pqcomb/identities.hpp"

#include "pqcomb/errors.hpp"
#include "pqcomb/poly.hpp"

#include <functional>
#include <stdexcept>
#include <utility>

namespace pqcomb {

namespace {

struct Cell {
    std::vector<long> v;
    std::optional<Scalar> x;  // NUMERIC sample point
    long operator[](std::size_t i) const { return v[i]; }
};

// Both sides of one cell. Scalar statements use one entry per side;
// polynomial statements store coefficient vectors.
struct Sides {
    std::vector<Scalar> lhs;
    std::vector<Scalar> rhs;
    bool polynomial = false;
};

Sides scalars(Scalar lhs, Scalar rhs) { return {{std::move(lhs)}, {std::move(rhs)}, false}; }
Sides polys(const Polynomial& lhs, const Polynomial& rhs) { return {lhs.coefficients(), rhs.coefficients(), true}; }

// Shorthand for the primitive quantities of one deformation.
struct Ctx {
    const Deformation& d;
    const NumericOptions& numeric;

    const Scalar& e1() const { return d.eps1; }
    const Scalar& e2() const { return d.eps2; }
    Scalar p1(long e) const { return pow(d.eps1, e); }
    Scalar p2(long e) const { return pow(d.eps2, e); }
    Scalar N(long n) const { return number(d, n); }
    Scalar F(long x, long k) const { return ordered_factorial(d, x, k); }
    Scalar B(long x, long k) const { return deformed_binomial(d, x, k); }
};

using Evaluator = std::function<std::optional<Sides>(const Ctx&, const Cell&)>;
using DomainCheck = std::function<bool(const Ctx&, const Cell&)>;

struct Entry {
    IdentityInfo info;
    Grid grid;
    DomainCheck domain;   // empty: every cell admissible
    Evaluator canonical;  // the certified statement
    Evaluator corrected;  // unit-corrected variant, tried when canonical fails
    Evaluator printed;    // the statement as displayed, when it differs
    std::vector<std::string> printed_names;  // parameter names of the displayed form, if renamed
    std::string note;
};

Range rng(std::string name, long lo, long hi) { return {std::move(name), Bound::constant(lo), Bound::constant(hi)}; }
Range rng(std::string name, Bound lo, Bound hi) { return {std::move(name), lo, hi}; }

Grid ints(std::vector<Range> ranges) { return Grid{std::move(ranges), {}}; }

Grid numeric_grid(std::vector<Range> ranges)
{
    return Grid{std::move(ranges), {Scalar(1, 2), Scalar(1, 4), Scalar(-1, 4), Scalar(-1, 2), Scalar(1, 3)}};
}

long sgn(long e) { return (e % 2 == 0) ? 1 : -1; }

Polynomial linear(const Scalar& c0, const Scalar& c1) { return Polynomial({c0, c1}); }

// Domain shared by the three series statements: the ratio eps2/eps1 and the
// sample point lie inside the unit disc so the series converge.
bool series_domain(const Ctx& c, const Cell& cell)
{
    Scalar t = c.e2() / c.e1();
    return abs(t) < 1 && cell.x && abs(*cell.x) < 1;
}

Scalar rising_denominator(const Ctx& c, long n, long k, const Scalar& x)
{
    Scalar den = 1;
    for (long i = 1; i <= k; ++i) den *= c.p1(n + i - 1) + x * c.p2(n + i - 1);
    return den;
}

std::vector<Entry> build_registry()
{
    std::vector<Entry> r;
    auto add = [&](IdentityId id, std::string_view token, std::string_view label, Mode mode, Grid grid) -> Entry& {
        r.push_back(Entry{{id, token, label, mode}, std::move(grid), {}, {}, {}, {}, {}, {}});
        return r.back();
    };
    using I = IdentityId;

    // [u]_{k+s} = [u]_s [u-s]_k
    add(I::FACTORIAL_SPLIT, "FACTORIAL_SPLIT", "fp", Mode::EXACT, ints({rng("u", 0, 10), rng("k", 0, 6), rng("s", 0, 6)}))
        .canonical = [](const Ctx& c, const Cell& z) {
            long u = z[0], k = z[1], s = z[2];
            return std::optional(scalars(c.F(u, k + s), c.F(u, s) * c.F(u - s, k)));
        };

    add(I::INV_FACTORIAL, "INV_FACTORIAL", "014", Mode::EXACT, ints({rng("u", 0, 10), rng("k", Bound::constant(0), Bound::of(0))}))
        .canonical = [](const Ctx& c, const Cell& z) {
            long u = z[0], k = z[1];
            Deformation inv = inverted_deformation(c.d);
            return std::optional(scalars(ordered_factorial(inv, u, k), pow(c.e1() * c.e2(), -u * k + choose2(k + 1)) * c.F(u, k)));
        };

    add(I::INV_BANG, "INV_BANG", "015", Mode::EXACT, ints({rng("u", 0, 10)})).canonical = [](const Ctx& c, const Cell& z) {
        long u = z[0];
        Deformation inv = inverted_deformation(c.d);
        return std::optional(scalars(deformed_factorial(inv, u), pow(c.e1() * c.e2(), -choose2(u)) * deformed_factorial(c.d, u)));
    };

    add(I::INV_BINOMIAL, "INV_BINOMIAL", "016", Mode::EXACT, ints({rng("u", 0, 10), rng("k", Bound::constant(0), Bound::of(0))}))
        .canonical = [](const Ctx& c, const Cell& z) {
            long u = z[0], k = z[1];
            Deformation inv = inverted_deformation(c.d);
            return std::optional(scalars(deformed_binomial(inv, u, k), pow(c.e1() * c.e2(), -k * (u - k)) * c.B(u, k)));
        };

    add(I::RATIO_BINOMIAL, "RATIO_BINOMIAL", "a016", Mode::EXACT, ints({rng("u", 0, 10), rng("k", Bound::constant(0), Bound::of(0))}))
        .canonical = [](const Ctx& c, const Cell& z) {
            long u = z[0], k = z[1];
            Deformation rat = ratio_deformation(c.d);
            return std::optional(scalars(deformed_binomial(rat, u, k), c.p1(-k * (u - k)) * c.B(u, k)));
        };

    add(I::PASCAL_1, "PASCAL_1", "bc1", Mode::EXACT, ints({rng("x", 1, 10), rng("k", Bound::constant(1), Bound::of(0))}))
        .canonical = [](const Ctx& c, const Cell& z) {
            long x = z[0], k = z[1];
            return std::optional(scalars(c.B(x, k), c.p1(k) * c.B(x - 1, k) + c.p2(x - k) * c.B(x - 1, k - 1)));
        };

    add(I::PASCAL_2, "PASCAL_2", "bc2", Mode::EXACT, ints({rng("x", 1, 10), rng("k", Bound::constant(1), Bound::of(0))}))
        .canonical = [](const Ctx& c, const Cell& z) {
            long x = z[0], k = z[1];
            return std::optional(scalars(c.B(x, k), c.p2(k) * c.B(x - 1, k) + c.p1(x - k) * c.B(x - 1, k - 1)));
        };

    {
        // prod_{i=1..n} (eps1^{m-i+1} - eps2^{m-i+1}) = (eps1 - eps2)^n [m]_n,
        // with m = x - r >= n. The closed form carries unit^n on the right.
        auto lhs = [](const Ctx& c, long m, long n) {
            Scalar l = 1;
            for (long i = 1; i <= n; ++i) l *= c.p1(m - i + 1) - c.p2(m - i + 1);
            return l;
        };
        Entry& e = add(I::POWER_DIFF, "POWER_DIFF", "pdiff", Mode::EXACT,
                       ints({rng("n", 0, 8), rng("m", Bound::of(0), Bound::constant(10))}));
        e.domain = [](const Ctx&, const Cell& z) { return z[1] >= z[0]; };
        e.canonical = [lhs](const Ctx& c, const Cell& z) {
            long n = z[0], m = z[1];
            return std::optional(scalars(lhs(c, m, n), pow(c.e1() - c.e2(), n) * c.F(m, n)));
        };
        e.corrected = [lhs](const Ctx& c, const Cell& z) {
            long n = z[0], m = z[1];
            return std::optional(scalars(lhs(c, m, n), pow(c.e1() - c.e2(), n) * c.F(m, n) / pow(c.d.unit, n)));
        };
    }

    auto vandermonde = [](bool swapped) {
        return [swapped](const Ctx& c, const Cell& z) {
            long x = z[0], y = z[1], n = z[2];
            Scalar s = 0;
            for (long k = 0; k <= n; ++k) {
                long a = k * (y - n + k), b = (n - k) * (x - k);
                if (swapped) std::swap(a, b);
                s += c.B(n, k) * c.p1(a) * c.p2(b) * c.F(x, k) * c.F(y, n - k);
            }
            return std::optional(scalars(c.F(x + y, n), s));
        };
    };
    add(I::VANDERMONDE_1, "VANDERMONDE_1", "vd1", Mode::EXACT, ints({rng("x", -3, 10), rng("y", -3, 10), rng("n", 0, 8)}))
        .canonical = vandermonde(false);
    add(I::VANDERMONDE_2, "VANDERMONDE_2", "vd2", Mode::EXACT, ints({rng("x", -3, 10), rng("y", -3, 10), rng("n", 0, 8)}))
        .canonical = vandermonde(true);

    add(I::RATIO_ID_1, "RATIO_ID_1", "ii1", Mode::EXACT, ints({rng("x", -3, 10), rng("y", -3, 10), rng("n", 0, 8)}))
        .canonical = [](const Ctx& c, const Cell& z) -> std::optional<Sides> {
            long x = z[0], y = z[1], n = z[2];
            Scalar den = c.F(y + n, n);
            if (den == 0) return std::nullopt;
            Scalar s = 0;
            for (long k = 0; k <= n; ++k) {
                Scalar dk = c.F(y + k, k);
                if (dk == 0) return std::nullopt;
                s += c.B(n, k) * c.p1(k * (y + k)) * c.p2((n - k) * (x - k)) * c.F(x, k) / dk;
            }
            return scalars(c.F(x + y + n, n) / den, s);
        };

    {
        // 1/[x-1 over n] as an alternating sum of [x]/[x-k].
        auto sum = [](const Ctx& c, long x, long n, bool displayed) -> std::optional<Scalar> {
            Scalar s = 0;
            for (long k = 0; k <= n; ++k) {
                Scalar dk = c.N(x - k);
                if (dk == 0) return std::nullopt;
                long a = displayed ? choose2(n - k) + k * (n - x) : choose2(k) + choose2(n + 1) - n * x;
                long b = displayed ? choose2(n - k) : choose2(n - k + 1);
                s += Scalar(sgn(n - k)) * c.B(n, k) * c.p1(a) * c.p2(b) * c.N(x) / dk;
            }
            return s;
        };
        auto eval = [sum](bool displayed) {
            return [sum, displayed](const Ctx& c, const Cell& z) -> std::optional<Sides> {
                long x = z[0], n = z[1];
                Scalar bb = c.B(x - 1, n);
                if (bb == 0) return std::nullopt;
                auto s = sum(c, x, n, displayed);
                if (!s) return std::nullopt;
                return scalars(1 / bb, *s);
            };
        };
        Entry& e = add(I::RATIO_ID_2, "RATIO_ID_2", "ii2", Mode::EXACT, ints({rng("x", -4, 10), rng("n", 0, 8)}));
        e.canonical = eval(false);
        e.printed = eval(true);
        e.note = "certified weights eps1^{C(k,2)+C(n+1,2)-nx} eps2^{C(n-k+1,2)}; the displayed eps2^{C(n-k,2)} is short by n-k, so it fails for eps1 = 1 as well";
    }

    {
        auto eval = [](bool inverse_lhs) {
            return [inverse_lhs](const Ctx& c, const Cell& z) -> std::optional<Sides> {
                long y = z[0], n = z[1];
                Scalar bb = c.B(y + n, n);
                if (bb == 0) return std::nullopt;
                Scalar s = 0;
                for (long k = 0; k <= n; ++k) {
                    Scalar dk = c.N(y + k);
                    if (dk == 0) return std::nullopt;
                    s += Scalar(sgn(k)) * c.B(n, k) * c.p1(choose2(k + 1)) * c.p2(choose2(k + 1) - n * (y + k)) * c.N(y) / dk;
                }
                return scalars(inverse_lhs ? Scalar(1 / bb) : bb, s);
            };
        };
        Entry& e = add(I::RATIO_ID_3, "RATIO_ID_3", "ii3", Mode::EXACT, ints({rng("y", -4, 10), rng("n", 0, 8)}));
        e.canonical = eval(true);
        e.printed = eval(false);
        e.note = "left side read as 1/[y+n over n]; the displayed inverse exponent gives [y+n over n] itself";
    }

    auto cauchy = [](bool swapped) {
        return [swapped](const Ctx& c, const Cell& z) {
            long u = z[0], v = z[1], n = z[2];
            Scalar s = 0;
            for (long k = 0; k <= n; ++k) {
                long a = k * (v - n + k), b = (n - k) * (u - k);
                if (swapped) std::swap(a, b);
                s += c.p1(a) * c.p2(b) * c.B(u, k) * c.B(v, n - k);
            }
            return std::optional(scalars(c.B(u + v, n), s));
        };
    };
    add(I::CAUCHY_1, "CAUCHY_1", "c1", Mode::EXACT, ints({rng("u", -3, 10), rng("v", -3, 10), rng("n", 0, 8)})).canonical = cauchy(false);
    add(I::CAUCHY_2, "CAUCHY_2", "c2", Mode::EXACT, ints({rng("u", -3, 10), rng("v", -3, 10), rng("n", 0, 8)})).canonical = cauchy(true);

    auto terminating = [](const Ctx&, const Cell& z) { return z[0] >= 0 && z[2] >= 1; };
    auto neg_vandermonde = [](bool swapped) {
        return [swapped](const Ctx& c, const Cell& z) -> std::optional<Sides> {
            long u = z[0], v = z[1], n = z[2];
            Scalar s = 0;
            for (long k = 0; k <= u; ++k) {
                long a = k * (v + n + k), b = (-n - k) * (u - k);
                if (swapped) std::swap(a, b);
                s += c.B(-n, k) * c.p1(a) * c.p2(b) * c.F(u, k) * c.F(v, -n - k);
            }
            return scalars(c.F(u + v, -n), s);
        };
    };
    {
        Entry& e = add(I::NEG_VANDERMONDE_1, "NEG_VANDERMONDE_1", "nvd1", Mode::EXACT,
                       ints({rng("u", 0, 6), rng("v", 0, 6), rng("n", 1, 4)}));
        e.domain = terminating;
        e.canonical = neg_vandermonde(false);
    }
    {
        Entry& e = add(I::NEG_VANDERMONDE_2, "NEG_VANDERMONDE_2", "nvd2", Mode::EXACT,
                       ints({rng("u", 0, 6), rng("v", 0, 6), rng("n", 1, 4)}));
        e.domain = terminating;
        e.canonical = neg_vandermonde(true);
    }

    auto neg_ratio = [](bool swapped, bool displayed) {
        return [swapped, displayed](const Ctx& c, const Cell& z) -> std::optional<Sides> {
            long u = z[0], v = z[1], n = z[2];
            Scalar lhs;
            if (displayed) {
                lhs = c.F(v, -n);
            } else {
                Scalar f = c.F(v, n);
                if (f == 0) return std::nullopt;
                lhs = 1 / f;
            }
            Scalar s = 0;
            for (long k = 0; k <= u; ++k) {
                Scalar den = c.F(u + v, n + k);
                if (den == 0) return std::nullopt;
                long a = n * (u - k), b = k * (v - n + 1);
                if (swapped) std::swap(a, b);
                s += c.B(n + k - 1, k) * c.p1(a) * c.p2(b) * c.F(u, k) / den;
            }
            return scalars(lhs, s);
        };
    };
    for (bool swapped : {false, true}) {
        Entry& e = swapped ? add(I::NEG_RATIO_2, "NEG_RATIO_2", "ndv12", Mode::EXACT,
                                 ints({rng("u", 0, 6), rng("v", 0, 6), rng("n", 1, 4)}))
                           : add(I::NEG_RATIO_1, "NEG_RATIO_1", "ndv11", Mode::EXACT,
                                 ints({rng("u", 0, 6), rng("v", 0, 6), rng("n", 1, 4)}));
        e.domain = terminating;
        e.canonical = neg_ratio(swapped, false);
        e.printed = neg_ratio(swapped, true);
        e.note = "left side read as 1/[v]_n; the displayed negative-order factorial [v]_{-n} is 1/[v+n]_n";
    }

    add(I::BINOMIAL_PRODUCT, "BINOMIAL_PRODUCT", "bn1", Mode::EXACT, ints({rng("n", 0, 8)}))
        .canonical = [](const Ctx& c, const Cell& z) {
            long n = z[0];
            std::vector<Scalar> coeffs;
            for (long k = 0; k <= n; ++k) coeffs.push_back(c.p1(choose2(n - k)) * c.p2(choose2(k)) * c.B(n, k));
            return std::optional(polys(product_linear_factors(c.d, n), Polynomial(std::move(coeffs))));
        };

    {
        // 1/prod_{r=1..n}(eps1^{r-1} - x eps2^{r-1}) as a power series in x.
        Entry& e = add(I::NEG_BINOMIAL_SERIES, "NEG_BINOMIAL_SERIES", "bn5", Mode::NUMERIC, numeric_grid({rng("n", 1, 4)}));
        e.domain = series_domain;
        e.canonical = [](const Ctx& c, const Cell& z) -> std::optional<Sides> {
            long n = z[0];
            const Scalar& x = *z.x;
            Scalar den = 1;
            for (long r = 1; r <= n; ++r) den *= c.p1(r - 1) - x * c.p2(r - 1);
            if (den == 0) return std::nullopt;
            Scalar s = 0, xk = 1;
            for (long k = 0; k < c.numeric.horizon; ++k, xk *= x)
                s += c.p1(-choose2(n) - k * (n - 1)) * c.B(n + k - 1, k) * xk;
            return scalars(1 / den, s);
        };
    }

    auto rothe_lhs = [](const Ctx& c, long n, const Scalar& x) {
        Scalar l = 1;
        for (long i = 1; i <= n; ++i) l *= c.p1(i - 1) + x * c.p2(i - 1);
        return l;
    };
    {
        Entry& e = add(I::ROTHE_1, "ROTHE_1", "ad1", Mode::NUMERIC, numeric_grid({rng("n", 1, 4)}));
        e.domain = series_domain;
        e.canonical = [rothe_lhs](const Ctx& c, const Cell& z) -> std::optional<Sides> {
            long n = z[0];
            const Scalar& x = *z.x;
            Scalar s = 0, xk = 1;
            for (long k = 0; k < c.numeric.horizon; ++k, xk *= x) {
                Scalar den = rising_denominator(c, n, k, x);
                if (den == 0) return std::nullopt;
                s += c.p1(choose2(n) + k) * c.p2(choose2(k)) * c.B(n + k - 1, k) * xk / den;
            }
            return scalars(rothe_lhs(c, n, x), s);
        };
    }
    {
        Entry& e = add(I::ROTHE_2, "ROTHE_2", "ad2", Mode::NUMERIC, numeric_grid({rng("n", 1, 4)}));
        e.domain = [](const Ctx& c, const Cell& z) { return series_domain(c, z) && *z.x != 0; };
        e.canonical = [rothe_lhs](const Ctx& c, const Cell& z) -> std::optional<Sides> {
            long n = z[0];
            const Scalar& x = *z.x;
            Scalar s = 0;
            for (long k = 0; k < c.numeric.horizon; ++k) {
                Scalar den = rising_denominator(c, n, k, x);
                if (den == 0) return std::nullopt;
                s += c.p2(k) * c.p1(choose2(k)) * c.B(n + k - 1, k) / den;
            }
            return scalars(rothe_lhs(c, n, x) / (pow(x, n) * c.p2(choose2(n))), s);
        };
        e.note = "the displayed series converges to the left side only when |eps2| > |eps1|";
    }

    auto ortho = [](bool second, bool displayed) {
        return [second, displayed](const Ctx& c, const Cell& z) {
            long n = z[0], k = z[1];
            Scalar s = 0;
            for (long x = k; x <= n; ++x) {
                long a, b, sign;
                if (!second) {
                    sign = sgn(n - x);
                    a = displayed ? choose2(x) : choose2(x - k);
                    b = choose2(n - x);
                } else {
                    sign = sgn(x - k);
                    a = displayed ? choose2(k) : choose2(n - x);
                    b = choose2(x - k);
                }
                s += Scalar(sign) * c.p1(a) * c.p2(b) * c.B(n, x) * c.B(x, k);
            }
            return std::optional(scalars(Scalar(n == k ? 1 : 0), s));
        };
    };
    {
        Entry& e = add(I::ORTHO_1, "ORTHO_1", "bn6", Mode::EXACT, ints({rng("n", 0, 8), rng("k", Bound::constant(0), Bound::of(0))}));
        e.canonical = ortho(false, false);
        e.printed = ortho(false, true);
        e.note = "certified eps1 weight is eps1^{C(x-k,2)}; the displayed eps1^{C(x,2)} agrees only when eps1 = 1";
    }
    {
        Entry& e = add(I::ORTHO_2, "ORTHO_2", "bn7", Mode::EXACT, ints({rng("n", 0, 8), rng("k", Bound::constant(0), Bound::of(0))}));
        e.canonical = ortho(true, false);
        e.printed = ortho(true, true);
        e.note = "certified eps1 weight is eps1^{C(n-x,2)}; the displayed eps1^{C(k,2)} agrees only when eps1 = 1";
    }

    {
        auto eval = [](bool displayed) {
            return [displayed](const Ctx& c, const Cell& z) {
                long n = z[0];
                Polynomial s;
                for (long k = 0; k <= n; ++k) {
                    Scalar w = displayed ? pow(c.e1() * c.e2(), choose2(k)) : c.p1(-k * (n - k)) * c.p2(choose2(k));
                    Polynomial term = Polynomial::constant(Scalar(sgn(k)) * w * c.B(n, k));
                    for (long r = 1; r <= k; ++r) term = term * linear(c.p1(1 - r), -c.p2(1 - r));
                    s = s + term;
                }
                return std::optional(polys(s, Polynomial::monomial(1, static_cast<std::size_t>(n))));
            };
        };
        Entry& e = add(I::INVERSION_POLY, "INVERSION_POLY", "bn11", Mode::EXACT, ints({rng("n", 0, 8)}));
        e.canonical = eval(false);
        e.printed = eval(true);
        e.note = "certified weight eps1^{-k(n-k)} eps2^{C(k,2)}; the displayed (eps1 eps2)^{C(k,2)} agrees only when eps1 = 1";
    }

    {
        auto eval = [](bool displayed, bool unit_corrected) {
            return [displayed, unit_corrected](const Ctx& c, const Cell& z) {
                long x = z[0], n = z[1];
                Scalar diff = unit_corrected ? Scalar((c.e1() - c.e2()) / c.d.unit) : Scalar(c.e1() - c.e2());
                Scalar s = 0;
                for (long k = 0; k <= n; ++k) {
                    long a = displayed ? choose2(k) - x * k : -k * (n - k) - x * k;
                    s += Scalar(sgn(k)) * c.p1(a) * c.p2(choose2(k)) * c.B(n, k) * pow(diff, k) * c.F(x, k);
                }
                return std::optional(scalars(s, pow(c.e2() / c.e1(), n * x)));
            };
        };
        Entry& e = add(I::INVERSION_POWER, "INVERSION_POWER", "bna11", Mode::EXACT, ints({rng("x", 0, 8), rng("n", 0, 8)}));
        e.canonical = eval(false, false);
        e.corrected = eval(false, true);
        e.printed = eval(true, false);
        e.note = "certified eps1 exponent -k(n-k)-xk; (eps1-eps2)^k carries unit^{-k} when unit != 1";
    }

    {
        auto eval = [](bool displayed) {
            return [displayed](const Ctx& c, const Cell& z) {
                long n = z[0];
                Polynomial s;
                for (long k = 0; k <= n; ++k) {
                    Scalar w = displayed ? Scalar(1) : c.p1(-k * (n - k) - choose2(k));
                    Polynomial term = Polynomial::monomial(w * c.B(n, k), static_cast<std::size_t>(n - k));
                    for (long r = 1; r <= k; ++r) term = term * linear(c.p1(r - 1), -c.p2(r - 1));
                    s = s + term;
                }
                return std::optional(polys(s, Polynomial::constant(1)));
            };
        };
        Entry& e = add(I::INVERSION_ALT, "INVERSION_ALT", "bn16", Mode::EXACT, ints({rng("n", 0, 8)}));
        e.canonical = eval(false);
        e.printed = eval(true);
        e.note = "certified weight eps1^{-k(n-k)-C(k,2)}; the displayed sum has no eps1 weight";
    }

    {
        auto eval = [](bool displayed, bool unit_corrected) {
            return [displayed, unit_corrected](const Ctx& c, const Cell& z) {
                long x = z[0], n = z[1];
                Scalar diff = unit_corrected ? Scalar((c.e1() - c.e2()) / c.d.unit) : Scalar(c.e1() - c.e2());
                Scalar s = 0;
                for (long k = 0; k <= n; ++k) {
                    long a = displayed ? -k * (n - k) : choose2(k);
                    s += c.B(n, k) * c.p1(a) * c.p2(-k * (x + n - k)) * pow(diff, k) * c.F(x, k);
                }
                return std::optional(scalars(s, pow(c.e1() / c.e2(), n * x)));
            };
        };
        Entry& e = add(I::INVERSION_ALT_B, "INVERSION_ALT_B", "bna17", Mode::EXACT, ints({rng("x", 0, 8), rng("n", 0, 8)}));
        e.canonical = eval(false, false);
        e.corrected = eval(false, true);
        e.printed = eval(true, false);
        e.note = "certified eps1 exponent C(k,2); (eps1-eps2)^k carries unit^{-k} when unit != 1";
    }

    add(I::CONV_SUM, "CONV_SUM", "a11", Mode::EXACT, ints({rng("r", 0, 8), rng("s", 0, 8), rng("n", 0, 8)}))
        .canonical = [](const Ctx& c, const Cell& z) {
            long r0 = z[0], s0 = z[1], n = z[2];
            Scalar s = 0;
            for (long k = 0; k <= n; ++k) s += c.p1(k * (s0 - n + k)) * c.p2((n - k) * (r0 - k)) * c.B(r0, k) * c.B(s0, n - k);
            return std::optional(scalars(s, c.B(r0 + s0, n)));
        };

    add(I::CONV_SYM, "CONV_SYM", "a12", Mode::EXACT, ints({rng("r", 0, 8), rng("m", Bound::constant(0), Bound::of(0))}))
        .canonical = [](const Ctx& c, const Cell& z) {
            long r0 = z[0], m = z[1];
            Scalar s = 0;
            for (long k = 0; k <= r0 - m; ++k)
                s += c.p1(k * (m + k)) * c.p2((r0 - k) * (r0 - k - m)) * c.B(r0, k) * c.B(r0, k + m);
            return std::optional(scalars(s, c.B(2 * r0, r0 + m)));
        };

    add(I::CONV_SQUARE, "CONV_SQUARE", "a13", Mode::EXACT, ints({rng("r", 0, 8)})).canonical = [](const Ctx& c, const Cell& z) {
        long r0 = z[0];
        Scalar s = 0;
        for (long k = 0; k <= r0; ++k) {
            Scalar b = c.B(r0, k);
            s += c.p1(k * k) * c.p2((r0 - k) * (r0 - k)) * b * b;
        }
        return std::optional(scalars(s, c.B(2 * r0, r0)));
    };

    {
        auto eval = [](bool displayed) {
            return [displayed](const Ctx& c, const Cell& z) {
                long r0 = z[0], s0 = z[1], n = z[2];
                Scalar s = 0;
                for (long k = 0; k <= n; ++k) {
                    long a = displayed ? r0 * (n - s0 - k) + k * s0 : k * s0;
                    s += c.p1(a) * c.p2(r0 * (n - k)) * c.B(r0 + k - 1, k) * c.B(s0 + n - k - 1, n - k);
                }
                return std::optional(scalars(c.B(r0 + s0 + n - 1, n), s));
            };
        };
        Entry& e = add(I::NEG_CONV, "NEG_CONV", "L327", Mode::EXACT, ints({rng("r", 1, 6), rng("s", 1, 6), rng("n", 0, 6)}));
        e.canonical = eval(false);
        e.printed = eval(true);
        e.note = "certified eps1 exponent ks; the displayed r(n-s-k)+ks agrees only when eps1 = 1";
    }

    {
        Entry& e = add(I::SPLIT_BINOMIAL, "SPLIT_BINOMIAL", "a31", Mode::EXACT,
                       ints({rng("n", 1, 8), rng("m", Bound::constant(1), Bound::of(0)), rng("k", Bound::constant(1), Bound::of(1))}));
        e.domain = [](const Ctx&, const Cell& z) { return 1 <= z[2] && z[2] <= z[1] && z[1] <= z[0]; };
        // Summation over the position r of the k-th chosen element.
        e.canonical = [](const Ctx& c, const Cell& z) {
            long n = z[0], m = z[1], k = z[2];
            Scalar s = 0;
            for (long r0 = k; r0 <= n; ++r0)
                s += c.p1((r0 - k) * (m - k + 1)) * c.p2(k * (n - m - r0 + k)) * c.B(r0 - 1, k - 1) * c.B(n - r0, m - k);
            return std::optional(scalars(c.B(n, m), s));
        };
        // The displayed sum runs over k with r held fixed.
        e.printed = [](const Ctx& c, const Cell& z) {
            long n = z[0], m = z[1], r0 = z[2];
            Scalar s = 0;
            for (long k = 0; k <= n; ++k)
                s += c.p1((k - 2 * r0 - m + n) * k + r0 * (m + 1)) * c.p2(k * (n - r0)) * c.B(r0 - 1, k - 1) * c.B(n - r0, m - k);
            return std::optional(scalars(c.B(n, m), s));
        };
        e.printed_names = {"n", "m", "r"};
        e.note = "certified sum runs over r = k..n with weights eps1^{(r-k)(m-k+1)} eps2^{k(n-m-r+k)}";
    }

    return r;
}

const std::vector<Entry>& registry()
{
    static const std::vector<Entry> entries = [] {
        auto v = build_registry();
        for (std::size_t i = 0; i < v.size(); ++i)
            if (static_cast<std::size_t>(v[i].info.id) != i) throw std::logic_error("identity registry out of order");
        return v;
    }();
    return entries;
}

const Entry& entry(IdentityId id) { return registry().at(static_cast<std::size_t>(id)); }

std::string poly_string(const std::vector<Scalar>& coeffs)
{
    if (coeffs.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] == 0) continue;
        if (!s.empty()) s += " + ";
        s += to_string(coeffs[i]);
        if (i == 1) s += "*x";
        if (i > 1) s += "*x^" + std::to_string(i);
    }
    return s;
}

std::string side_string(const std::vector<Scalar>& side, bool polynomial)
{
    return polynomial ? poly_string(side) : to_string(side.front());
}

Params cell_params(const std::vector<std::string>& names, const Cell& cell)
{
    Params p;
    for (std::size_t i = 0; i < cell.v.size(); ++i) p.emplace_back(i < names.size() ? names[i] : "arg" + std::to_string(i), cell.v[i]);
    if (cell.x) p.emplace_back("x", to_string(*cell.x));
    return p;
}

// NUMERIC failures also carry the relative error of the partial sum, since
// the exact partial sum is usually a very long rational.
Params failure_params(const std::vector<std::string>& names, const Cell& cell, const Sides& s, Mode mode)
{
    Params p = cell_params(names, cell);
    if (mode == Mode::NUMERIC) p.emplace_back("relative_error", to_decimal(relative_error(s.lhs.front(), s.rhs.front())));
    return p;
}

std::optional<Sides> evaluate(const Evaluator& f, const Ctx& c, const Cell& cell)
{
    try {
        return f(c, cell);
    } catch (const DivisionByZeroFactor&) {
        return std::nullopt;
    }
}

bool sides_agree(const Sides& s, Mode mode, const NumericOptions& numeric)
{
    if (mode == Mode::EXACT) return s.lhs == s.rhs;
    return within_relative(s.lhs.front(), s.rhs.front(), numeric.tolerance);
}

std::string describe_cell(const Params& params)
{
    std::string s;
    for (const auto& [name, value] : params) {
        if (!s.empty()) s += ",";
        s += name + "=" + (std::holds_alternative<long>(value) ? std::to_string(std::get<long>(value)) : std::get<std::string>(value));
    }
    return s;
}

}  // namespace

long Bound::resolve(const std::vector<long>& prefix) const
{
    if (ref < 0) return value;
    return prefix.at(static_cast<std::size_t>(ref)) + value;
}

std::vector<std::vector<long>> Grid::integer_cells() const
{
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == ranges.size()) {
            out.push_back(cur);
            return;
        }
        long lo = ranges[i].lo.resolve(cur), hi = ranges[i].hi.resolve(cur);
        for (long v = lo; v <= hi; ++v) {
            cur.push_back(v);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

const std::vector<IdentityInfo>& list_identities()
{
    static const std::vector<IdentityInfo> infos = [] {
        std::vector<IdentityInfo> v;
        for (const auto& e : registry()) v.push_back(e.info);
        return v;
    }();
    return infos;
}

const IdentityInfo& identity_info(IdentityId id) { return entry(id).info; }

IdentityId parse_identity(std::string_view token_or_label)
{
    for (const auto& info : list_identities())
        if (info.token == token_or_label || info.label == token_or_label) return info.id;
    throw ParseError("unknown identity '" + std::string(token_or_label) + "'");
}

Grid default_grid(IdentityId id) { return entry(id).grid; }

CheckReport check_identity(IdentityId id, const Deformation& d, const Grid& g, const CheckOptions& options)
{
    const Entry& e = entry(id);
    if (options.requested_mode == Mode::EXACT && e.info.mode == Mode::NUMERIC)
        throw NonTerminatingSeries(std::string(e.info.token) + " is an infinite series and has no exact check");
    if (g.ranges.size() != e.grid.ranges.size())
        throw DomainViolation(std::string(e.info.token) + " expects " + std::to_string(e.grid.ranges.size()) + " integer ranges");
    if (e.info.mode == Mode::NUMERIC && g.samples.empty())
        throw DomainViolation(std::string(e.info.token) + " needs at least one sample point");
    if (options.numeric.horizon < 1) throw DomainViolation("numeric horizon must be positive");

    std::vector<std::string> names;
    for (const auto& r : g.ranges) names.push_back(r.name);
    std::vector<std::string> printed_names = e.printed_names.empty() ? names : e.printed_names;

    std::vector<Cell> cells;
    for (auto& v : g.integer_cells()) {
        if (e.info.mode == Mode::NUMERIC) {
            for (const auto& x : g.samples) cells.push_back({v, x});
        } else {
            cells.push_back({v, std::nullopt});
        }
    }
    if (cells.empty()) throw DomainViolation(std::string(e.info.token) + " grid has no cells");

    Ctx ctx{d, options.numeric};
    FormTally canon;
    FormTally printed;
    for (const Cell& cell : cells) {
        if (e.domain && !e.domain(ctx, cell)) {
            if (options.strict)
                throw DomainViolation(std::string(e.info.token) + " cell outside validity domain: " +
                                      describe_cell(cell_params(names, cell)));
            canon.skip();
            if (e.printed) printed.skip();
            continue;
        }

        auto sides = evaluate(e.canonical, ctx, cell);
        if (!sides) {
            canon.skip();
        } else if (sides_agree(*sides, e.info.mode, options.numeric)) {
            canon.pass();
        } else {
            std::optional<Sides> fixed = e.corrected ? evaluate(e.corrected, ctx, cell) : std::nullopt;
            if (fixed && sides_agree(*fixed, e.info.mode, options.numeric))
                canon.pass_corrected();
            else
                canon.fail(failure_params(names, cell, *sides, e.info.mode), side_string(sides->lhs, sides->polynomial),
                           side_string(sides->rhs, sides->polynomial));
        }

        if (e.printed) {
            auto ps = evaluate(e.printed, ctx, cell);
            if (!ps)
                printed.skip();
            else if (sides_agree(*ps, e.info.mode, options.numeric))
                printed.pass();
            else
                printed.fail(failure_params(printed_names, cell, *ps, e.info.mode), side_string(ps->lhs, ps->polynomial),
                             side_string(ps->rhs, ps->polynomial));
        }
    }

    CheckReport report;
    report.identity = std::string(e.info.token);
    report.label = std::string(e.info.label);
    report.mode = e.info.mode;
    report.deformation = d.describe();
    report.result = canon.finish();
    if (e.printed) report.printed_form = printed.finish();
    if (!e.note.empty()) report.notes.push_back(e.note);
    return report;
}

std::vector<CheckReport> check_all(const Deformation& d, const std::map<IdentityId, Grid>& grids, const NumericOptions& numeric)
{
    CheckOptions options;
    options.numeric = numeric;
    options.strict = false;
    std::vector<CheckReport> out;
    for (const auto& info : list_identities()) {
        auto it = grids.find(info.id);
        out.push_back(check_identity(info.id, d, it != grids.end() ? it->second : default_grid(info.id), options));
    }
    return out;
}

}  // namespace pqcomb
