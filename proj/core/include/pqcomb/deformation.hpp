#pragma once

#include "pqcomb/scalar.hpp"

#include <string>
#include <string_view>

namespace pqcomb {

enum class Kind { Q, PQ_JS, QUESNE, CUSTOM };

std::string_view kind_token(Kind kind);  // "q", "pq", "quesne", "custom"
Kind parse_kind(std::string_view token);

// A deformation is the triple (eps1, eps2, unit) with
//   [n] = unit * (eps1^n - eps2^n) / (eps1 - eps2)
// for every integer n. p and q are kept for reporting; for CUSTOM they
// mirror eps1 and eps2.
struct Deformation {
    Kind kind = Kind::Q;
    Scalar p{1};
    Scalar q{1, 2};
    Scalar eps1{1};
    Scalar eps2{1, 2};
    Scalar unit{1};

    // Compact description used in reports, e.g. "q(p=1,q=1/2)".
    std::string describe() const;
};

bool operator==(const Deformation& a, const Deformation& b);

// Built-in kinds require 0 < q < p <= 1:
//   Q      -> (1, q, 1)
//   PQ_JS  -> (p, q, 1)
//   QUESNE -> (p, 1/q, p/q)
Deformation make_deformation(Kind kind, const Scalar& p, const Scalar& q);
Deformation make_custom_deformation(const Scalar& eps1, const Scalar& eps2, const Scalar& unit);

// [n], defined for every integer n.
Scalar number(const Deformation& d, long n);

// [1][2]...[n]; throws NegativeArgument for n < 0.
Scalar deformed_factorial(const Deformation& d, long n);

// [x]_k = [x][x-1]...[x-k+1] for k >= 0, and 1/[x+|k|]_{|k|} for k < 0.
// Throws DivisionByZeroFactor when the negative-order denominator vanishes.
Scalar ordered_factorial(const Deformation& d, long x, long k);

// [x over k] = [x]_k / [k]!; zero for k < 0.
Scalar deformed_binomial(const Deformation& d, long x, long k);

// (1/eps1, 1/eps2, unit).
Deformation inverted_deformation(const Deformation& d);

// (1, eps2/eps1, unit).
Deformation ratio_deformation(const Deformation& d);

}  // namespace pqcomb
