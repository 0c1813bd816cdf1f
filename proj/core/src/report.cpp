#include "pqcomb/report.hpp"

#include <json.hpp>

namespace pqcomb {

using ojson = nlohmann::ordered_json;

std::string_view status_name(Status s)
{
    switch (s) {
    case Status::PASS: return "PASS";
    case Status::FAIL: return "FAIL";
    case Status::PASS_WITH_UNIT_CORRECTION: return "PASS_WITH_UNIT_CORRECTION";
    case Status::SKIPPED: return "SKIPPED";
    }
    return "?";
}

std::string_view mode_name(Mode m) { return m == Mode::EXACT ? "EXACT" : "NUMERIC"; }

void FormTally::fail(Params params, std::string lhs, std::string rhs)
{
    ++r_.cells;
    ++r_.failed;
    if (r_.counterexamples.size() < max_examples_)
        r_.counterexamples.push_back({std::move(params), std::move(lhs), std::move(rhs)});
}

bool FormTally::compare(const Params& params, const Scalar& lhs, const Scalar& rhs)
{
    if (lhs == rhs) {
        pass();
        return true;
    }
    fail(params, lhs, rhs);
    return false;
}

FormResult FormTally::finish() const
{
    FormResult r = r_;
    if (r.cells == 0)
        r.status = Status::SKIPPED;
    else if (r.failed > 0)
        r.status = Status::FAIL;
    else if (r.unit_corrected > 0)
        r.status = Status::PASS_WITH_UNIT_CORRECTION;
    else
        r.status = Status::PASS;
    return r;
}

CheckReport make_report(std::string identity, std::string label, Mode mode, std::string deformation,
                        const FormTally& result, const FormTally* printed, std::vector<std::string> notes)
{
    CheckReport r;
    r.identity = std::move(identity);
    r.label = std::move(label);
    r.mode = mode;
    r.deformation = std::move(deformation);
    r.result = result.finish();
    if (printed) r.printed_form = printed->finish();
    r.notes = std::move(notes);
    return r;
}

AuditSummary summarize(const std::vector<CheckReport>& reports)
{
    AuditSummary s;
    for (const auto& r : reports) {
        switch (r.status()) {
        case Status::PASS: ++s.pass; break;
        case Status::FAIL: ++s.fail; break;
        case Status::PASS_WITH_UNIT_CORRECTION: ++s.unit_corrected; break;
        case Status::SKIPPED: ++s.skipped; break;
        }
        if (r.printed_form && r.printed_form->status == Status::FAIL) ++s.printed_form_fail;
    }
    return s;
}

namespace {

ojson params_json(const Params& params)
{
    ojson o = ojson::object();
    for (const auto& [name, value] : params) {
        if (std::holds_alternative<long>(value))
            o[name] = std::get<long>(value);
        else
            o[name] = std::get<std::string>(value);
    }
    return o;
}

ojson examples_json(const std::vector<Counterexample>& examples)
{
    ojson a = ojson::array();
    for (const auto& c : examples) {
        ojson e;
        e["params"] = params_json(c.params);
        e["lhs"] = c.lhs;
        e["rhs"] = c.rhs;
        a.push_back(std::move(e));
    }
    return a;
}

ojson form_json(const FormResult& f)
{
    ojson o;
    o["status"] = status_name(f.status);
    o["cells"] = f.cells;
    o["skipped"] = f.skipped;
    o["counterexamples"] = examples_json(f.counterexamples);
    return o;
}

ojson to_ojson(const CheckReport& r)
{
    ojson o;
    o["identity"] = r.identity;
    o["paper_eq"] = r.label;
    o["status"] = status_name(r.status());
    o["cells"] = r.result.cells;
    o["skipped"] = r.result.skipped;
    o["counterexamples"] = examples_json(r.result.counterexamples);
    o["mode"] = mode_name(r.mode);
    o["deformation"] = r.deformation;
    if (r.result.unit_corrected > 0) o["unit_corrected_cells"] = r.result.unit_corrected;
    if (r.printed_form) o["printed_form"] = form_json(*r.printed_form);
    if (!r.notes.empty()) o["notes"] = r.notes;
    return o;
}

}  // namespace

std::string report_to_json(const CheckReport& report, int indent) { return to_ojson(report).dump(indent); }

std::string audit_to_json(const std::vector<CheckReport>& reports, int indent)
{
    ojson doc;
    ojson arr = ojson::array();
    for (const auto& r : reports) arr.push_back(to_ojson(r));
    doc["reports"] = std::move(arr);
    AuditSummary s = summarize(reports);
    ojson sum;
    sum["pass"] = s.pass;
    sum["fail"] = s.fail;
    sum["unit_corrected"] = s.unit_corrected;
    sum["skipped"] = s.skipped;
    sum["printed_form_fail"] = s.printed_form_fail;
    doc["summary"] = std::move(sum);
    return doc.dump(indent);
}

}  // namespace pqcomb
