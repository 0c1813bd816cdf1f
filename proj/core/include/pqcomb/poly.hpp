#pragma once

#include "pqcomb/deformation.hpp"
#include "pqcomb/scalar.hpp"

#include <cstddef>
#include <vector>

namespace pqcomb {

// Dense univariate polynomial, coefficient i multiplies x^i. Trailing zeros
// are trimmed, so the zero polynomial has no coefficients and degree -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Scalar> coefficients);
    static Polynomial constant(const Scalar& c);
    static Polynomial monomial(const Scalar& c, std::size_t degree);

    const std::vector<Scalar>& coefficients() const { return coeffs_; }
    long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    Scalar coefficient(std::size_t i) const;

    Scalar operator()(const Scalar& x) const;  // Horner

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }

private:
    void trim();
    std::vector<Scalar> coeffs_;
};

enum class PolyOp { add, sub, mul };
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);
Scalar poly_eval(const Polynomial& p, const Scalar& x);

// prod_{r=1..n} (eps1^{r-1} + x eps2^{r-1}).
Polynomial product_linear_factors(const Deformation& d, long n);

// Truncated power series sum_{i<=order} c_i v^i.
class PowerSeries {
public:
    static constexpr std::size_t default_order = 16;

    explicit PowerSeries(std::size_t order = default_order);
    PowerSeries(std::vector<Scalar> coefficients, std::size_t order);
    static PowerSeries from_polynomial(const Polynomial& p, std::size_t order);

    std::size_t order() const { return order_; }
    const Scalar& operator[](std::size_t i) const { return coeffs_[i]; }
    Scalar& operator[](std::size_t i) { return coeffs_[i]; }
    const std::vector<Scalar>& coefficients() const { return coeffs_; }

    PowerSeries reciprocal() const;  // throws NonInvertibleSeries
    PowerSeries shifted(std::size_t by) const;  // multiply by v^by

    friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
    friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
    friend bool operator==(const PowerSeries& a, const PowerSeries& b)
    {
        return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
    }

private:
    std::size_t order_;
    std::vector<Scalar> coeffs_;
};

enum class SeriesOp { add, mul, reciprocal_of_b_then_mul };
PowerSeries series_arith(const PowerSeries& a, const PowerSeries& b, SeriesOp op);

}  // namespace pqcomb
