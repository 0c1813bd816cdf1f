#pragma once

#include "pqcomb/deformation.hpp"
#include "pqcomb/report.hpp"
#include "pqcomb/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pqcomb {

enum class IdentityId {
    FACTORIAL_SPLIT,
    INV_FACTORIAL,
    INV_BANG,
    INV_BINOMIAL,
    RATIO_BINOMIAL,
    PASCAL_1,
    PASCAL_2,
    POWER_DIFF,
    VANDERMONDE_1,
    VANDERMONDE_2,
    RATIO_ID_1,
    RATIO_ID_2,
    RATIO_ID_3,
    CAUCHY_1,
    CAUCHY_2,
    NEG_VANDERMONDE_1,
    NEG_VANDERMONDE_2,
    NEG_RATIO_1,
    NEG_RATIO_2,
    BINOMIAL_PRODUCT,
    NEG_BINOMIAL_SERIES,
    ROTHE_1,
    ROTHE_2,
    ORTHO_1,
    ORTHO_2,
    INVERSION_POLY,
    INVERSION_POWER,
    INVERSION_ALT,
    INVERSION_ALT_B,
    CONV_SUM,
    CONV_SYM,
    CONV_SQUARE,
    NEG_CONV,
    SPLIT_BINOMIAL,
};

struct IdentityInfo {
    IdentityId id;
    std::string_view token;  // e.g. "ORTHO_1"
    std::string_view label;  // short equation label, e.g. "bn6"
    Mode mode;
};

// All 34 entries in registry order.
const std::vector<IdentityInfo>& list_identities();
const IdentityInfo& identity_info(IdentityId id);
// Accepts a token or a label, case-sensitive. Throws ParseError.
IdentityId parse_identity(std::string_view token_or_label);

// An integer bound, either a constant or an offset from an earlier
// parameter of the same cell (so triangular grids such as k <= n can be
// described).
struct Bound {
    long value = 0;
    int ref = -1;  // index of an earlier range, or -1 for a constant

    static Bound constant(long v) { return {v, -1}; }
    static Bound of(int index, long offset = 0) { return {offset, index}; }
    long resolve(const std::vector<long>& prefix) const;
};

struct Range {
    std::string name;
    Bound lo;
    Bound hi;
};

struct Grid {
    std::vector<Range> ranges;
    // Free rational sample points; only NUMERIC identities read them.
    std::vector<Scalar> samples;

    // Cartesian enumeration of the integer ranges in lexicographic order.
    std::vector<std::vector<long>> integer_cells() const;
};

Grid default_grid(IdentityId id);

struct NumericOptions {
    Scalar tolerance{1, 1000000000};
    long horizon = 64;
};

struct CheckOptions {
    NumericOptions numeric;
    // Strict checks reject cells outside the validity domain with
    // DomainViolation; non-strict checks count them as skipped.
    bool strict = true;
    // Requesting EXACT for a NUMERIC identity raises NonTerminatingSeries.
    std::optional<Mode> requested_mode;
};

CheckReport check_identity(IdentityId id, const Deformation& d, const Grid& g, const CheckOptions& options = {});

// One report per registry entry, in registry order, non-strict. Grids
// missing from the map fall back to default_grid.
std::vector<CheckReport> check_all(const Deformation& d, const std::map<IdentityId, Grid>& grids = {},
                                   const NumericOptions& numeric = {});

}  // namespace pqcomb
