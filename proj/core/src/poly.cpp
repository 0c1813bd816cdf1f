#include "pqcomb/poly.hpp"

#include "pqcomb/errors.hpp"

#include <algorithm>
#include <utility>

namespace pqcomb {

Polynomial::Polynomial(std::vector<Scalar> coefficients) : coeffs_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::constant(const Scalar& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(const Scalar& c, std::size_t degree)
{
    std::vector<Scalar> v(degree + 1, Scalar(0));
    v[degree] = c;
    return Polynomial(std::move(v));
}

void Polynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Scalar Polynomial::coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Scalar(0); }

Scalar Polynomial::operator()(const Scalar& x) const
{
    Scalar acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b)
{
    std::vector<Scalar> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] += b.coeffs_[i];
    return Polynomial(std::move(r));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b)
{
    std::vector<Scalar> r(std::max(a.coeffs_.size(), b.coeffs_.size()), Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) r[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) r[i] -= b.coeffs_[i];
    return Polynomial(std::move(r));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b)
{
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Scalar> r(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(r));
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op)
{
    switch (op) {
    case PolyOp::add: return a + b;
    case PolyOp::sub: return a - b;
    case PolyOp::mul: return a * b;
    }
    return {};
}

Scalar poly_eval(const Polynomial& p, const Scalar& x) { return p(x); }

Polynomial product_linear_factors(const Deformation& d, long n)
{
    Polynomial acc = Polynomial::constant(1);
    for (long r = 1; r <= n; ++r) acc = acc * Polynomial({pow(d.eps1, r - 1), pow(d.eps2, r - 1)});
    return acc;
}

PowerSeries::PowerSeries(std::size_t order) : order_(order), coeffs_(order + 1, Scalar(0)) {}

PowerSeries::PowerSeries(std::vector<Scalar> coefficients, std::size_t order)
    : order_(order), coeffs_(std::move(coefficients))
{
    coeffs_.resize(order_ + 1, Scalar(0));
}

PowerSeries PowerSeries::from_polynomial(const Polynomial& p, std::size_t order)
{
    PowerSeries s(order);
    for (std::size_t i = 0; i <= order; ++i) s.coeffs_[i] = p.coefficient(i);
    return s;
}

PowerSeries PowerSeries::reciprocal() const
{
    if (coeffs_[0] == 0) throw NonInvertibleSeries("constant term is zero");
    PowerSeries r(order_);
    Scalar inv0 = 1 / coeffs_[0];
    r.coeffs_[0] = inv0;
    for (std::size_t n = 1; n <= order_; ++n) {
        Scalar acc(0);
        for (std::size_t k = 1; k <= n; ++k) acc += coeffs_[k] * r.coeffs_[n - k];
        r.coeffs_[n] = -acc * inv0;
    }
    return r;
}

PowerSeries PowerSeries::shifted(std::size_t by) const
{
    PowerSeries r(order_);
    for (std::size_t i = 0; i + by <= order_; ++i) r.coeffs_[i + by] = coeffs_[i];
    return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries r(std::min(a.order_, b.order_));
    for (std::size_t i = 0; i <= r.order_; ++i) r.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
    return r;
}

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b)
{
    PowerSeries r(std::min(a.order_, b.order_));
    for (std::size_t i = 0; i <= r.order_; ++i)
        for (std::size_t j = 0; i + j <= r.order_; ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return r;
}

PowerSeries series_arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op)
{
    switch (op) {
    case SeriesOp::add: return a + b;
    case SeriesOp::mul: return a * b;
    case SeriesOp::reciprocal_of_b_then_mul: return a * b.reciprocal();
    }
    return a;
}

}  // namespace pqcomb
