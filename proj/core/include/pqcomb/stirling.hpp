#pragma once

#include "pqcomb/deformation.hpp"
#include "pqcomb/identities.hpp"
#include "pqcomb/poly.hpp"
#include "pqcomb/report.hpp"
#include "pqcomb/scalar.hpp"

#include <utility>
#include <vector>

namespace pqcomb {

enum class StirlingKind { FIRST, SECOND };

// j is the noncentrality; tau is the grading exponent that appears in the
// recursion coefficients eps1^{tau-n-j} (first kind) and eps1^{tau-k}
// (second kind). tau has no effect when eps1 = 1.
struct StirlingConfig {
    Deformation d;
    long j = 0;
    long tau = 0;
};

// Rows 0..n_max of one kind, built by the recursions
//   s(n+1,k) = s(n,k-1) - eps1^{tau-n-j} [n+j] s(n,k)
//   S(n+1,k) = S(n,k-1) + eps1^{tau-k} [k+j] S(n,k)
// with s(n,0) = eps2^{C(n,2)+jn} [-j]_n and S(n,0) = [j]^n.
class StirlingTable {
public:
    StirlingTable(StirlingKind kind, StirlingConfig cfg, long n_max);

    StirlingKind kind() const { return kind_; }
    const StirlingConfig& config() const { return cfg_; }
    long n_max() const { return static_cast<long>(rows_.size()) - 1; }

    // Zero outside 0 <= k <= n; throws DomainViolation for n > n_max.
    Scalar operator()(long n, long k) const;
    const std::vector<std::vector<Scalar>>& rows() const { return rows_; }

private:
    StirlingKind kind_;
    StirlingConfig cfg_;
    std::vector<std::vector<Scalar>> rows_;
};

Scalar stirling_first(const StirlingConfig& cfg, long n, long k);
Scalar stirling_second(const StirlingConfig& cfg, long n, long k);

// {[x-j]_n, eps2^{-C(n,2)-jn} sum_k s(n,k) [x]^k}
std::pair<Scalar, Scalar> expand_factorial_in_powers(const StirlingConfig& cfg, long n, long x);
// {[x]^n, sum_k eps2^{C(k,2)+jk} S(n,k) [x-j]_k}
std::pair<Scalar, Scalar> expand_powers_in_factorials(const StirlingConfig& cfg, long n, long x);
// {[x+j]^n, sum_k eps2^{C(k,2)+jk} S(n,k) [x]_k}
std::pair<Scalar, Scalar> expand_shifted_powers_in_factorials(const StirlingConfig& cfg, long n, long x);

// sum_m s(n,m) S(m,k) = delta and the transposed product, n, k <= n_max.
CheckReport stirling_orthogonality(const StirlingConfig& cfg, long n_max);

// Alternating closed sums over i = k..n with grading x = cfg.tau and
// noncentrality r, evaluated as displayed. Requires n >= 1, 1 <= k <= n.
Scalar explicit_stirling(const StirlingConfig& cfg, StirlingKind kind, long n, long k, long r);

// v^k prod_{i=0..k} (1 - eps1^{tau-i} [j+i] v)^{-1} truncated at `order`.
PowerSeries genfunc_second(const StirlingConfig& cfg, long k, std::size_t order = PowerSeries::default_order);

enum class ReciprocalSeries {
    POWERS,      // 1/prod [t-x-i]  against  sum_n S(n,k) / [t]^{n+1}
    FACTORIALS,  // 1/[t]^{k+1}     against  sum_n s(n,k) / prod [t-x-i]
};

// NUMERIC check at one (k, t) with x = cfg.j and grading r = cfg.tau. The
// stated domain t > k + x is enforced unless enforce_domain is false, which
// allows probing the mirrored domain t < 0.
CheckReport reciprocal_expansion(const StirlingConfig& cfg, ReciprocalSeries which, long k, long t,
                                 const NumericOptions& numeric = {}, bool enforce_domain = true);
std::pair<CheckReport, CheckReport> reciprocal_expansions(const StirlingConfig& cfg, long k, long t,
                                                          const NumericOptions& numeric = {});

// C(K,j) and [K over j] recovered from the first and second kind tables of
// cfg (column j), as displayed. Requires K, j >= 1.
std::pair<CheckReport, CheckReport> classical_binomial_bridge(const StirlingConfig& cfg, long K, long j);

// (-1)^{m-j} (eps1-eps2)^{m-j} eps1^{C(m,2)-tau(m-j)} s(m,j), the weight of
// [K over m] in the expansion of C(K,j). tau is the table's grading.
Scalar classical_bridge_weight(const StirlingTable& s, long m, long j);

// s(u,1) and s(u,2) in closed form. CERTIFIED is the form derived from the
// recursion and agrees with it for every deformation:
//   s(u,1) = (-1)^{u-1} eps1^{tau(u-1)-C(u,2)} [u-1]!
//   s(u,2) = (-1)^u eps1^{tau(u-1)-C(u,2)} [u-1]! sum_{i=1..u-1} eps1^{i-tau}/[i]
// DISPLAYED evaluates the exponents as typeset, which agree only when
// eps1 = 1.
Scalar special_first_column(const StirlingConfig& cfg, long u, int column, ClosedForm form = ClosedForm::CERTIFIED);

// (-unit)^{k-n} s(n,k): the sign-free first kind numbers. Exactly |s| for
// unit = 1; for other units the values carry unit^{k-n}.
Scalar signless_first(const StirlingConfig& cfg, long n, long k);

// Independent q-case oracle: rows 0..n_max obtained by solving the defining
// expansions as linear systems at x = 0..n. Requires eps1 = 1.
std::vector<std::vector<Scalar>> q_stirling_oracle(const Deformation& d, StirlingKind kind, long j, long n_max);

// Every Stirling statement as an audit over fixed default samples.
std::vector<CheckReport> stirling_audit(const Deformation& d, const NumericOptions& numeric = {});

}  // namespace pqcomb
