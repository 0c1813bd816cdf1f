#include "cli.hpp"

#include "pqcomb/pqcomb.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iomanip>
#include <optional>
#include <sstream>

namespace pqcomb::cli {

namespace {

using ojson = nlohmann::ordered_json;

enum class Format { TABLE, JSON, CSV };

struct Config {
    std::string deformation = "q";
    std::string p = "1";
    std::string q = "1/2";
    std::optional<std::string> eps1, eps2;
    std::string unit = "1";
    std::optional<long> n, k, x;
    long j = 0;
    long tau = 0;
    std::optional<long> dual_path;
    std::optional<std::string> graph_file, dist_file, moments_file;
    std::string format = "table";
    std::optional<std::string> out_file;
    std::string tolerance = "1e-9";
    long horizon = 64;
    std::string type;
    std::vector<std::string> only;
    std::vector<std::string> identities;
    bool timestamp = false;
};

Format parse_format(const std::string& s)
{
    if (s == "table") return Format::TABLE;
    if (s == "json") return Format::JSON;
    return Format::CSV;
}

Deformation build_deformation(const Config& c)
{
    Kind kind = parse_kind(c.deformation);
    if (kind == Kind::CUSTOM) {
        if (!c.eps1 || !c.eps2) throw DomainViolation("custom deformation needs --eps1 and --eps2");
        return make_custom_deformation(parse_rational(*c.eps1), parse_rational(*c.eps2), parse_rational(c.unit));
    }
    return make_deformation(kind, parse_rational(c.p), parse_rational(c.q));
}

long need(const std::optional<long>& v, const char* flag)
{
    if (!v) throw DomainViolation(std::string("missing required flag ") + flag);
    return *v;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
}

std::string render_value(const Scalar& v, Format f)
{
    switch (f) {
    case Format::JSON: return "{\"value\": " + ojson(to_string(v)).dump() + "}\n";
    case Format::CSV: return "value\n" + to_string(v) + "\n";
    case Format::TABLE: break;
    }
    return to_string(v) + "\n";
}

std::string render_rows(const std::vector<std::vector<Scalar>>& rows, Format f)
{
    std::ostringstream os;
    if (f == Format::JSON) {
        ojson arr = ojson::array();
        for (const auto& row : rows) {
            ojson r = ojson::array();
            for (const auto& v : row) r.push_back(to_string(v));
            arr.push_back(r);
        }
        ojson doc = ojson::object();
        doc["rows"] = arr;
        os << doc.dump() << "\n";
        return os.str();
    }
    if (f == Format::CSV) {
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << to_string(row[i]);
            os << "\n";
        }
        return os.str();
    }
    std::size_t width = 1;
    for (const auto& row : rows)
        for (const auto& v : row) width = std::max(width, to_string(v).size());
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "  " : "") << std::setw(static_cast<int>(width)) << to_string(row[i]);
        os << "\n";
    }
    return os.str();
}

std::string render_audit(const std::vector<CheckReport>& reports, const Config& c, const Deformation& d, Format f)
{
    AuditSummary s = summarize(reports);
    std::ostringstream os;
    if (f == Format::JSON) {
        ojson body = ojson::parse(audit_to_json(reports, -1));
        ojson meta = ojson::object();
        meta["deformation"] = d.describe();
        meta["tolerance"] = c.tolerance;
        meta["horizon"] = c.horizon;
        if (c.timestamp) {
            std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
            char buf[32];
            std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", std::gmtime(&now));
            meta["generated_at"] = buf;
        }
        ojson doc = ojson::object();
        doc["metadata"] = meta;
        doc["reports"] = body["reports"];
        doc["summary"] = body["summary"];
        os << doc.dump(2) << "\n";
        return os.str();
    }
    auto printed = [](const CheckReport& r) -> std::string {
        return r.printed_form ? std::string(status_name(r.printed_form->status)) : "-";
    };
    if (f == Format::CSV) {
        os << "identity,label,mode,status,cells,skipped,failed,printed_form\n";
        for (const auto& r : reports)
            os << csv_field(r.identity) << "," << csv_field(r.label) << "," << mode_name(r.mode) << ","
               << status_name(r.status()) << "," << r.result.cells << "," << r.result.skipped << "," << r.result.failed
               << "," << printed(r) << "\n";
        return os.str();
    }
    std::size_t wi = 8, wl = 5;
    for (const auto& r : reports) {
        wi = std::max(wi, r.identity.size());
        wl = std::max(wl, r.label.size());
    }
    os << "deformation " << d.describe() << "\n";
    os << std::left << std::setw(static_cast<int>(wi)) << "identity" << "  " << std::setw(static_cast<int>(wl)) << "label"
       << "  " << std::setw(25) << "status" << "  " << std::setw(6) << "cells" << "  printed_form\n";
    for (const auto& r : reports)
        os << std::setw(static_cast<int>(wi)) << r.identity << "  " << std::setw(static_cast<int>(wl)) << r.label << "  "
           << std::setw(25) << status_name(r.status()) << "  " << std::setw(6) << r.result.cells << "  " << printed(r)
           << "\n";
    os << "summary pass=" << s.pass << " fail=" << s.fail << " unit_corrected=" << s.unit_corrected
       << " skipped=" << s.skipped << " printed_form_fail=" << s.printed_form_fail << "\n";
    return os.str();
}

Graph load_graph(const Config& c)
{
    if (c.dual_path && c.graph_file) throw DomainViolation("give either --dual-path or --graph, not both");
    if (c.dual_path) return dual_path_graph(*c.dual_path);
    if (c.graph_file) return parse_graph_json(read_file(*c.graph_file));
    throw DomainViolation("bell needs --dual-path N or --graph FILE");
}

std::string cmd_moments(const Config& c, const Deformation& d, Format f)
{
    if (c.moments_file) {
        MomentVector mv = parse_moment_vector_json(read_file(*c.moments_file));
        DiscreteDistribution dist = distribution_from_binomial_moments(d, mv);
        if (f == Format::JSON) return distribution_to_json(dist) + "\n";
        std::ostringstream os;
        os << (f == Format::CSV ? "x,probability\n" : "");
        for (const auto& [x, p] : dist.probabilities()) os << x << (f == Format::CSV ? "," : "  ") << to_string(p) << "\n";
        return os.str();
    }
    if (!c.dist_file) throw DomainViolation("moments needs --dist FILE or --moments FILE");
    DiscreteDistribution dist = parse_distribution_json(read_file(*c.dist_file));
    MeanVariance mv = deformed_mean_variance(d, dist);
    MomentVector fact = moment_vector(d, dist, MomentKind::FACTORIAL);
    MomentVector bin = moment_vector(d, dist, MomentKind::BINOMIAL);
    std::optional<std::pair<Scalar, Scalar>> bridged, direct;
    if (c.j >= 1) {
        bridged = classical_moments_from_deformed(d, dist, c.j, c.tau);
        direct = classical_moments(dist, c.j);
    }
    if (f == Format::JSON) {
        ojson doc = ojson::object();
        doc["mean"] = to_string(mv.mean);
        doc["variance"] = to_string(mv.variance);
        ojson fm = ojson::object(), bm = ojson::object();
        for (std::size_t r = 0; r < fact.values.size(); ++r) {
            fm[std::to_string(r)] = to_string(fact.values[r]);
            bm[std::to_string(r)] = to_string(bin.values[r]);
        }
        doc["factorial_moments"] = fm;
        doc["binomial_moments"] = bm;
        if (bridged) {
            ojson cl = ojson::object();
            cl["j"] = c.j;
            cl["tau"] = c.tau;
            cl["binomial"] = to_string(bridged->first);
            cl["factorial"] = to_string(bridged->second);
            cl["direct_binomial"] = to_string(direct->first);
            cl["direct_factorial"] = to_string(direct->second);
            doc["classical"] = cl;
        }
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    const char* sep = f == Format::CSV ? "," : "  ";
    if (f == Format::CSV) os << "quantity,order,value\n";
    os << "mean" << sep << sep << to_string(mv.mean) << "\n";
    os << "variance" << sep << sep << to_string(mv.variance) << "\n";
    for (std::size_t r = 0; r < fact.values.size(); ++r)
        os << "factorial_moment" << sep << r << sep << to_string(fact.values[r]) << "\n";
    for (std::size_t r = 0; r < bin.values.size(); ++r)
        os << "binomial_moment" << sep << r << sep << to_string(bin.values[r]) << "\n";
    if (bridged) {
        os << "classical_binomial" << sep << c.j << sep << to_string(bridged->first) << "\n";
        os << "classical_factorial" << sep << c.j << sep << to_string(bridged->second) << "\n";
        os << "direct_binomial" << sep << c.j << sep << to_string(direct->first) << "\n";
        os << "direct_factorial" << sep << c.j << sep << to_string(direct->second) << "\n";
    }
    return os.str();
}

int cmd_audit(const Config& c, const Deformation& d, Format f, std::string& text)
{
    NumericOptions numeric;
    numeric.tolerance = parse_decimal(c.tolerance);
    numeric.horizon = c.horizon;
    if (numeric.horizon < 1) throw DomainViolation("--horizon must be >= 1");
    const std::vector<std::string> all{"identities", "stirling", "bellgraph", "moments"};
    std::vector<std::string> parts = c.only.empty() ? all : c.only;
    std::vector<CheckReport> reports;
    auto wanted = [&](const std::string& s) { return std::find(parts.begin(), parts.end(), s) != parts.end(); };
    if (wanted("identities")) {
        if (c.identities.empty()) {
            auto r = check_all(d, {}, numeric);
            reports.insert(reports.end(), r.begin(), r.end());
        } else {
            CheckOptions opts;
            opts.numeric = numeric;
            opts.strict = false;
            for (const auto& token : c.identities) {
                IdentityId id = parse_identity(token);
                reports.push_back(check_identity(id, d, default_grid(id), opts));
            }
        }
    }
    if (wanted("stirling")) {
        auto r = stirling_audit(d, numeric);
        reports.insert(reports.end(), r.begin(), r.end());
    }
    if (wanted("bellgraph")) {
        auto r = bellgraph_audit(d);
        reports.insert(reports.end(), r.begin(), r.end());
    }
    if (wanted("moments")) {
        auto r = moments_audit(d);
        reports.insert(reports.end(), r.begin(), r.end());
    }
    text = render_audit(reports, c, d, f);
    return summarize(reports).fail > 0 ? exit_audit_failed : exit_ok;
}

void add_deformation_flags(CLI::App* sub, Config& c)
{
    sub->add_option("--deformation", c.deformation, "Deformation kind: q, pq, quesne or custom (default q)")
        ->check(CLI::IsMember({"q", "pq", "quesne", "custom"}));
    sub->add_option("--p", c.p, "Parameter p as a rational a/b (default 1)");
    sub->add_option("--q", c.q, "Parameter q as a rational a/b (default 1/2)");
    sub->add_option("--eps1", c.eps1, "Custom eps1");
    sub->add_option("--eps2", c.eps2, "Custom eps2");
    sub->add_option("--unit", c.unit, "Custom unit factor (default 1)");
    sub->add_option("--format", c.format, "Output format: table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--out", c.out_file, "Write the output to FILE instead of standard output");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Config c;
    CLI::App app{"Exact deformed combinatorics: numbers, factorials, binomials, Stirling and graph Bell numbers, "
                 "moments, and identity audits. Defaults: --deformation q --q 1/2.",
                 "pqcomb"};
    app.require_subcommand(1);

    auto* number = app.add_subcommand("number", "Deformed number [n]");
    add_deformation_flags(number, c);
    number->add_option("--n", c.n, "Integer argument")->required();

    auto* factorial = app.add_subcommand("factorial", "[n]! or, with --x and --k, the ordered factorial [x]_k");
    add_deformation_flags(factorial, c);
    factorial->add_option("--n", c.n, "Argument of [n]!");
    factorial->add_option("--x", c.x, "Base of [x]_k");
    factorial->add_option("--k", c.k, "Order of [x]_k");

    auto* binomial = app.add_subcommand("binomial", "Deformed binomial coefficient [n over k]");
    add_deformation_flags(binomial, c);
    binomial->add_option("--n", c.n, "Upper argument")->required();
    binomial->add_option("--k", c.k, "Lower argument")->required();

    auto* triangle = app.add_subcommand("triangle", "Rows 0..n of a triangle");
    add_deformation_flags(triangle, c);
    triangle->add_option("--n", c.n, "Last row")->required();
    triangle->add_option("--type", c.type, "binomial, stirling1 or stirling2 (default binomial)")
        ->check(CLI::IsMember({"binomial", "stirling1", "stirling2"}));
    triangle->add_option("--j", c.j, "Noncentrality for Stirling triangles");
    triangle->add_option("--tau", c.tau, "Grading exponent for Stirling triangles");

    auto* stirling = app.add_subcommand("stirling", "One Stirling number s(n,k), S(n,k) or the signless first kind");
    add_deformation_flags(stirling, c);
    stirling->add_option("--n", c.n, "Row")->required();
    stirling->add_option("--k", c.k, "Column")->required();
    stirling->add_option("--j", c.j, "Noncentrality");
    stirling->add_option("--tau", c.tau, "Grading exponent");
    stirling->add_option("--type", c.type, "first, second or signless (default second)")
        ->check(CLI::IsMember({"first", "second", "signless"}));

    auto* bell = app.add_subcommand("bell", "Graph Stirling number S(G,k) with --k, otherwise the graph Bell number");
    add_deformation_flags(bell, c);
    bell->add_option("--dual-path", c.dual_path, "Use the dual path graph on N vertices");
    bell->add_option("--graph", c.graph_file, "Graph JSON file {\"n\": N, \"edges\": [[i,k],...]}");
    bell->add_option("--k", c.k, "Number of blocks");

    auto* moments = app.add_subcommand("moments", "Deformed moments of a distribution, or its reconstruction");
    add_deformation_flags(moments, c);
    moments->add_option("--dist", c.dist_file, "Distribution JSON file {\"probs\": {\"0\": \"1/2\", ...}}");
    moments->add_option("--moments", c.moments_file, "Binomial moment JSON file to invert");
    moments->add_option("--j", c.j, "Classical moment order (>= 1) to recover");
    moments->add_option("--tau", c.tau, "Grading exponent for the classical bridge");

    auto* audit = app.add_subcommand("audit", "Check every statement; exit status 2 when any check fails");
    add_deformation_flags(audit, c);
    audit->add_option("--tolerance", c.tolerance, "Relative tolerance for series checks (default 1e-9)");
    audit->add_option("--horizon", c.horizon, "Number of series terms (default 64)");
    audit->add_option("--only", c.only, "Restrict to identities, stirling, bellgraph or moments")
        ->check(CLI::IsMember({"identities", "stirling", "bellgraph", "moments"}));
    audit->add_option("--identity", c.identities, "Restrict the identity audit to these tokens");
    audit->add_flag("--timestamp", c.timestamp, "Add generated_at to the JSON metadata");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        if (app.get_subcommands().empty()) err << "run with --help for usage\n";
        return exit_usage;
    }

    int status = exit_ok;
    std::string text;
    try {
        const Deformation d = build_deformation(c);
        const Format f = parse_format(c.format);
        if (number->parsed()) {
            text = render_value(pqcomb::number(d, *c.n), f);
        } else if (factorial->parsed()) {
            if (c.x || c.k)
                text = render_value(ordered_factorial(d, need(c.x, "--x"), need(c.k, "--k")), f);
            else
                text = render_value(deformed_factorial(d, need(c.n, "--n")), f);
        } else if (binomial->parsed()) {
            text = render_value(deformed_binomial(d, *c.n, *c.k), f);
        } else if (triangle->parsed()) {
            if (*c.n < 0) throw NegativeArgument("--n must be nonnegative");
            std::vector<std::vector<Scalar>> rows;
            if (c.type.empty() || c.type == "binomial") {
                for (long m = 0; m <= *c.n; ++m) {
                    rows.emplace_back();
                    for (long i = 0; i <= m; ++i) rows.back().push_back(deformed_binomial(d, m, i));
                }
            } else {
                StirlingTable t(c.type == "stirling1" ? StirlingKind::FIRST : StirlingKind::SECOND,
                                StirlingConfig{d, c.j, c.tau}, *c.n);
                rows = t.rows();
            }
            text = render_rows(rows, f);
        } else if (stirling->parsed()) {
            StirlingConfig cfg{d, c.j, c.tau};
            if (*c.n < 0) throw NegativeArgument("--n must be nonnegative");
            Scalar v = c.type == "first"      ? stirling_first(cfg, *c.n, *c.k)
                       : c.type == "signless" ? signless_first(cfg, *c.n, *c.k)
                                              : stirling_second(cfg, *c.n, *c.k);
            text = render_value(v, f);
        } else if (bell->parsed()) {
            Graph g = load_graph(c);
            text = render_value(c.k ? graph_stirling_second(d, g, *c.k) : graph_bell(d, g), f);
        } else if (moments->parsed()) {
            text = cmd_moments(c, d, f);
        } else if (audit->parsed()) {
            status = cmd_audit(c, d, f, text);
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_usage;
    }

    if (c.out_file) {
        std::ofstream file(*c.out_file, std::ios::binary);
        if (!file) {
            err << "error: cannot write " << *c.out_file << "\n";
            return exit_usage;
        }
        file << text;
    } else {
        out << text;
    }
    return status;
}

}  // namespace pqcomb::cli
