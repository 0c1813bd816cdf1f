#pragma once

#include "pqcomb/pqcomb.hpp"

#include <vector>

namespace pqcomb::testing_support {

inline Scalar R(long num, long den = 1)
{
    Scalar r(num, den);
    r.canonicalize();
    return r;
}

inline Deformation q_def(long num = 1, long den = 2) { return make_deformation(Kind::Q, R(1), R(num, den)); }
inline Deformation pq_def(const Scalar& p, const Scalar& q) { return make_deformation(Kind::PQ_JS, p, q); }
inline Deformation quesne_def(const Scalar& p, const Scalar& q) { return make_deformation(Kind::QUESNE, p, q); }

// The parameter points the property tests sweep.
inline std::vector<Deformation> all_kinds()
{
    return {q_def(1, 2),          q_def(2, 3),          pq_def(R(3, 4), R(1, 2)), pq_def(R(9, 10), R(2, 3)),
            quesne_def(R(3, 4), R(1, 2)), quesne_def(R(1), R(1, 2))};
}

inline std::vector<Deformation> unit_one_kinds()
{
    return {q_def(1, 2), q_def(2, 3), pq_def(R(3, 4), R(1, 2)), pq_def(R(9, 10), R(2, 3))};
}

}  // namespace pqcomb::testing_support
