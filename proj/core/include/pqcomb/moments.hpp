#pragma once

#include "pqcomb/deformation.hpp"
#include "pqcomb/report.hpp"
#include "pqcomb/scalar.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace pqcomb {

// Exact distribution on a finite set of nonnegative integers. Only points
// with positive probability are stored.
class DiscreteDistribution {
public:
    // Throws DomainViolation for negative points or probabilities, an empty
    // support, or a total different from 1.
    explicit DiscreteDistribution(const std::map<long, Scalar>& probs);

    const std::map<long, Scalar>& probabilities() const { return probs_; }
    Scalar probability(long x) const;
    long max_point() const { return probs_.rbegin()->first; }

private:
    std::map<long, Scalar> probs_;
};

bool operator==(const DiscreteDistribution& a, const DiscreteDistribution& b);

// {"probs": {"0": "1/2", "1": "1/2"}}. Throws ParseError or DomainViolation.
DiscreteDistribution parse_distribution_json(std::string_view text);
std::string distribution_to_json(const DiscreteDistribution& dist, int indent = 2);

// Point masses, a uniform law on {0..m}, and pseudo-random laws built from a
// 64-bit Mersenne twister so the same seed gives the same law everywhere.
DiscreteDistribution point_mass(long x);
DiscreteDistribution uniform_distribution(const std::vector<long>& points);
DiscreteDistribution random_distribution(std::uint64_t seed, long max_point);

enum class MomentKind { FACTORIAL, BINOMIAL };

// values[r] is the moment of order r, r = 0..max support point.
struct MomentVector {
    MomentKind kind = MomentKind::BINOMIAL;
    std::vector<Scalar> values;
};

// {"kind": "binomial", "order": {"0": "1", "1": "1/2"}}.
std::string moment_vector_to_json(const MomentVector& mv, int indent = 2);
MomentVector parse_moment_vector_json(std::string_view text);

// E([X]_r) and E([X over r]); throws NegativeArgument for r < 0.
Scalar deformed_factorial_moment(const Deformation& d, const DiscreteDistribution& dist, long r);
Scalar deformed_binomial_moment(const Deformation& d, const DiscreteDistribution& dist, long r);
MomentVector moment_vector(const Deformation& d, const DiscreteDistribution& dist, MomentKind kind);

struct MeanVariance {
    Scalar mean;
    Scalar variance;
};

// mean = E([X]), variance = E([X]^2) - mean^2.
MeanVariance deformed_mean_variance(const Deformation& d, const DiscreteDistribution& dist);

// eps2 E([X]_2) + unit_power * E(eps1^{X-1} [X]) - mean^2. The identity
// [x]^2 = eps2 [x]_2 + unit eps1^{x-1} [x] makes unit_power = 1 exact, so the
// uncorrected decomposition (unit_power = 0) holds only when unit = 1.
Scalar variance_decomposition(const Deformation& d, const DiscreteDistribution& dist, long unit_power = 0);

// Classical E[C(X,j)] and E[(X)_j] from deformed binomial moments through
// first kind Stirling numbers with grading tau. Requires j >= 1.
std::pair<Scalar, Scalar> classical_moments_from_deformed(const Deformation& d, const DiscreteDistribution& dist, long j,
                                                          long tau = 0);

// Direct E[C(X,j)] and E[(X)_j], the independent oracle.
std::pair<Scalar, Scalar> classical_moments(const DiscreteDistribution& dist, long j);

// g(x) = sum_{m>=x} c_{m-x} [m over x] E[X over m] for x = 0..len-1.
//   CERTIFIED: c_i = [i]! times the coefficient of z^i in 1 / sum_k z^k/[k]!
//   DISPLAYED: c_i [m over x] replaced by (-1)^i eps1^{C(x,2)} eps2^{C(i,2)} [m over x]
// The two agree when eps1 = 1. Throws DomainViolation for factorial moments.
std::vector<Scalar> invert_binomial_moments(const Deformation& d, const MomentVector& mv,
                                            ClosedForm form = ClosedForm::CERTIFIED);

// The certified inversion as a distribution. Throws InconsistentMoments when
// a reconstructed probability is negative or the total differs from 1.
DiscreteDistribution distribution_from_binomial_moments(const Deformation& d, const MomentVector& mv);

// Moment relations over a fixed set of sample distributions.
std::vector<CheckReport> moments_audit(const Deformation& d);

}  // namespace pqcomb
