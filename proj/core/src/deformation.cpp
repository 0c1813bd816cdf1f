#include "pqcomb/deformation.hpp"

#include "pqcomb/errors.hpp"

namespace pqcomb {

std::string_view kind_token(Kind kind)
{
    switch (kind) {
    case Kind::Q: return "q";
    case Kind::PQ_JS: return "pq";
    case Kind::QUESNE: return "quesne";
    case Kind::CUSTOM: return "custom";
    }
    return "?";
}

Kind parse_kind(std::string_view token)
{
    if (token == "q") return Kind::Q;
    if (token == "pq") return Kind::PQ_JS;
    if (token == "quesne") return Kind::QUESNE;
    if (token == "custom") return Kind::CUSTOM;
    throw ParseError("unknown deformation kind '" + std::string(token) + "'");
}

std::string Deformation::describe() const
{
    std::string s(kind_token(kind));
    if (kind == Kind::CUSTOM)
        return s + "(eps1=" + to_string(eps1) + ",eps2=" + to_string(eps2) + ",unit=" + to_string(unit) + ")";
    if (kind == Kind::Q) return s + "(q=" + to_string(q) + ")";
    return s + "(p=" + to_string(p) + ",q=" + to_string(q) + ")";
}

bool operator==(const Deformation& a, const Deformation& b)
{
    return a.kind == b.kind && a.p == b.p && a.q == b.q && a.eps1 == b.eps1 && a.eps2 == b.eps2 &&
           a.unit == b.unit;
}

Deformation make_deformation(Kind kind, const Scalar& p, const Scalar& q)
{
    if (kind == Kind::CUSTOM)
        throw DegenerateDeformation("custom deformations are built from (eps1, eps2, unit)");
    Scalar pp = kind == Kind::Q ? Scalar(1) : p;
    if (!(q > 0 && q < pp && pp <= 1))
        throw ParameterOrdering("need 0 < q < p <= 1, got p=" + to_string(pp) + " q=" + to_string(q));
    Deformation d;
    d.kind = kind;
    d.p = pp;
    d.q = q;
    switch (kind) {
    case Kind::Q:
        d.eps1 = 1;
        d.eps2 = q;
        d.unit = 1;
        break;
    case Kind::PQ_JS:
        d.eps1 = pp;
        d.eps2 = q;
        d.unit = 1;
        break;
    case Kind::QUESNE:
        d.eps1 = pp;
        d.eps2 = 1 / q;
        d.unit = pp / q;
        break;
    case Kind::CUSTOM: break;
    }
    return d;
}

Deformation make_custom_deformation(const Scalar& eps1, const Scalar& eps2, const Scalar& unit)
{
    if (eps1 == 0 || eps2 == 0 || unit == 0)
        throw DegenerateDeformation("eps1, eps2 and unit must be nonzero");
    if (eps1 == eps2) throw DegenerateDeformation("eps1 == eps2");
    Deformation d;
    d.kind = Kind::CUSTOM;
    d.p = eps1;
    d.q = eps2;
    d.eps1 = eps1;
    d.eps2 = eps2;
    d.unit = unit;
    return d;
}

Scalar number(const Deformation& d, long n)
{
    if (n == 0) return Scalar(0);
    if (n == 1) return d.unit;
    return d.unit * (pow(d.eps1, n) - pow(d.eps2, n)) / (d.eps1 - d.eps2);
}

Scalar deformed_factorial(const Deformation& d, long n)
{
    if (n < 0) throw NegativeArgument("deformed factorial of " + std::to_string(n));
    Scalar r(1);
    for (long i = 1; i <= n; ++i) r *= number(d, i);
    return r;
}

Scalar ordered_factorial(const Deformation& d, long x, long k)
{
    if (k >= 0) {
        Scalar r(1);
        for (long v = 1; v <= k; ++v) {
            r *= number(d, x - v + 1);
            if (r == 0) break;
        }
        return r;
    }
    Scalar den = ordered_factorial(d, x - k, -k);
    if (den == 0)
        throw DivisionByZeroFactor("[" + std::to_string(x) + "]_" + std::to_string(k) +
                                   " has a vanishing factor");
    return 1 / den;
}

Scalar deformed_binomial(const Deformation& d, long x, long k)
{
    if (k < 0) return Scalar(0);
    Scalar num = ordered_factorial(d, x, k);
    if (num == 0) return num;
    return num / deformed_factorial(d, k);
}

Deformation inverted_deformation(const Deformation& d)
{
    Deformation r = d;
    r.kind = Kind::CUSTOM;
    r.eps1 = 1 / d.eps1;
    r.eps2 = 1 / d.eps2;
    r.p = r.eps1;
    r.q = r.eps2;
    return r;
}

Deformation ratio_deformation(const Deformation& d)
{
    if (d.eps1 == 1) return d;
    Deformation r = d;
    r.kind = Kind::CUSTOM;
    r.eps1 = 1;
    r.eps2 = d.eps2 / d.eps1;
    r.p = r.eps1;
    r.q = r.eps2;
    return r;
}

}  // namespace pqcomb
