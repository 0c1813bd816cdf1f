#pragma once

#include "pqcomb/scalar.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace pqcomb {

enum class Status { PASS, FAIL, PASS_WITH_UNIT_CORRECTION, SKIPPED };
enum class Mode { EXACT, NUMERIC };

// Which variant of a closed form to evaluate: the one derived and verified
// against the defining recursion or enumeration, or the exponents as typeset.
enum class ClosedForm { CERTIFIED, DISPLAYED };

std::string_view status_name(Status s);
std::string_view mode_name(Mode m);

using ParamValue = std::variant<long, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

struct Counterexample {
    Params params;
    std::string lhs;
    std::string rhs;
};

// Outcome of one statement over a grid. Kept separate from CheckReport so a
// report can carry the result of the displayed (as typeset) variant of an
// identity next to the result of the form actually certified.
struct FormResult {
    Status status = Status::SKIPPED;
    std::size_t cells = 0;
    std::size_t skipped = 0;
    std::size_t unit_corrected = 0;
    std::size_t failed = 0;
    std::vector<Counterexample> counterexamples;
};

struct CheckReport {
    std::string identity;  // registry token or audit name
    std::string label;     // short equation label
    Mode mode = Mode::EXACT;
    std::string deformation;
    FormResult result;
    std::optional<FormResult> printed_form;
    std::vector<std::string> notes;

    Status status() const { return result.status; }
};

// Collects cell outcomes and derives the status:
//   no evaluated cell -> SKIPPED, any mismatch -> FAIL,
//   any cell only equal after a unit correction -> PASS_WITH_UNIT_CORRECTION.
class FormTally {
public:
    explicit FormTally(std::size_t max_counterexamples = 5) : max_examples_(max_counterexamples) {}

    void skip() { ++r_.skipped; }
    void pass() { ++r_.cells; }
    void pass_corrected()
    {
        ++r_.cells;
        ++r_.unit_corrected;
    }
    void fail(Params params, std::string lhs, std::string rhs);
    void fail(Params params, const Scalar& lhs, const Scalar& rhs) { fail(std::move(params), to_string(lhs), to_string(rhs)); }
    // Records equal -> pass, otherwise fail with the exact values.
    bool compare(const Params& params, const Scalar& lhs, const Scalar& rhs);

    FormResult finish() const;

private:
    std::size_t max_examples_;
    FormResult r_;
};

// Assembles a report from finished tallies.
CheckReport make_report(std::string identity, std::string label, Mode mode, std::string deformation,
                        const FormTally& result, const FormTally* printed = nullptr,
                        std::vector<std::string> notes = {});

struct AuditSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t unit_corrected = 0;
    std::size_t skipped = 0;
    std::size_t printed_form_fail = 0;
};

AuditSummary summarize(const std::vector<CheckReport>& reports);

// JSON documents. Keys keep a fixed order so output is byte-stable.
std::string report_to_json(const CheckReport& report, int indent = 2);
std::string audit_to_json(const std::vector<CheckReport>& reports, int indent = 2);

}  // namespace pqcomb
