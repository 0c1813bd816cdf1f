// Acceptance driver: one PASS/FAIL line per criterion, exit status 1 when any
// criterion fails. Time budgets are part of each criterion.

#include "cli.hpp"
#include "oracles.hpp"

#include <pqcomb/pqcomb.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace pqcomb;

namespace {

Scalar R(long num, long den = 1)
{
    Scalar r(num, den);
    r.canonicalize();
    return r;
}

Deformation q_def(long num, long den) { return make_deformation(Kind::Q, R(1), R(num, den)); }
Deformation pq_def(const Scalar& p, const Scalar& q) { return make_deformation(Kind::PQ_JS, p, q); }
Deformation quesne_def(const Scalar& p, const Scalar& q) { return make_deformation(Kind::QUESNE, p, q); }

struct Outcome {
    bool pass = true;
    std::string detail;
};

// Accumulates mismatches and keeps the first few for the printed line.
struct Ledger {
    std::size_t checked = 0;
    std::size_t failed = 0;
    std::vector<std::string> first;

    void expect(bool ok, const std::string& what)
    {
        ++checked;
        if (ok) return;
        ++failed;
        if (first.size() < 3) first.push_back(what);
    }
    std::string mismatches() const
    {
        std::string s = std::to_string(failed) + "/" + std::to_string(checked) + " mismatches";
        for (const auto& f : first) s += "; " + f;
        return s;
    }
};

Outcome gaussian_oracle()
{
    Ledger l;
    for (const auto& q : {R(1, 2), R(2, 3), R(9, 10)}) {
        Deformation d = make_deformation(Kind::Q, R(1), q);
        for (long n = 0; n <= 12; ++n)
            for (long k = 0; k <= n; ++k)
                l.expect(deformed_binomial(d, n, k) == oracles::evaluate(oracles::gaussian_binomial_poly(n, k), q),
                         "q=" + to_string(q) + " n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    return {l.failed == 0, std::to_string(l.checked) + " cells, " + l.mismatches()};
}

Outcome exact_identity_audit()
{
    Ledger l;
    std::size_t tokens = 0;
    for (const auto& d : {q_def(1, 2), q_def(2, 3), pq_def(R(3, 4), R(1, 2)), pq_def(R(9, 10), R(2, 3))}) {
        tokens = 0;
        for (const auto& r : check_all(d)) {
            if (r.mode != Mode::EXACT) continue;
            ++tokens;
            l.expect(r.status() == Status::PASS, r.identity + " " + std::string(status_name(r.status())) + " under " + d.describe());
        }
    }
    return {l.failed == 0 && tokens == 31,
            std::to_string(tokens) + " EXACT tokens x 4 deformations, " + l.mismatches()};
}

Outcome numeric_convergence()
{
    Ledger l;
    std::map<std::string, std::pair<std::size_t, std::size_t>> by_label;  // label -> {failed, checked}
    auto tally = [&](const CheckReport& r, const std::string& what) {
        auto& [failed, checked] = by_label[r.label];
        ++checked;
        if (r.status() != Status::PASS) ++failed;
        l.expect(r.status() == Status::PASS, what);
    };
    NumericOptions numeric;  // tolerance 1e-9, horizon 64
    const std::vector<Deformation> kinds{q_def(1, 2), q_def(2, 3), pq_def(R(3, 4), R(1, 2)), pq_def(R(9, 10), R(2, 3))};
    for (const auto& d : kinds) {
        for (IdentityId id : {IdentityId::NEG_BINOMIAL_SERIES, IdentityId::ROTHE_1, IdentityId::ROTHE_2}) {
            CheckReport r = check_identity(id, d, default_grid(id), CheckOptions{numeric, true, std::nullopt});
            tally(r, r.identity + "(" + r.label + ") " + std::string(status_name(r.status())) + " under " + d.describe());
        }
        // Reciprocal expansions at sample points with k + x <= 1 and t > k + x.
        const long samples[][3] = {{0, 0, 0}, {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 0, 1}};
        for (const auto& sm : samples)
            for (long dt = 1; dt <= 3; ++dt) {
                StirlingConfig cfg{d, sm[1], sm[2]};
                long t = sm[0] + sm[1] + dt;
                for (auto which : {ReciprocalSeries::POWERS, ReciprocalSeries::FACTORIALS}) {
                    CheckReport r = reciprocal_expansion(cfg, which, sm[0], t, numeric);
                    tally(r, r.label + " " + std::string(status_name(r.status())) + " k=" + std::to_string(sm[0]) +
                                 " x=" + std::to_string(sm[1]) + " t=" + std::to_string(t) + " under " + d.describe());
                }
            }
    }
    std::string counts;
    for (const auto& [label, fc] : by_label)
        counts += label + " " + std::to_string(fc.first) + "/" + std::to_string(fc.second) + " failing, ";
    return {l.failed == 0, counts + l.mismatches()};
}

Outcome stirling_ground_truth()
{
    Ledger l;
    for (const auto& d : {q_def(1, 2), q_def(2, 3), q_def(9, 10)}) {
        StirlingConfig cfg{d, 0, 0};
        for (auto kind : {StirlingKind::FIRST, StirlingKind::SECOND}) {
            StirlingTable table(kind, cfg, 8);
            l.expect(table.rows() == q_stirling_oracle(d, kind, 0, 8),
                     std::string(kind == StirlingKind::FIRST ? "first" : "second") + " kind table under " + d.describe());
        }
        for (long j = 0; j <= 2; ++j) {
            CheckReport r = stirling_orthogonality(StirlingConfig{d, j, 0}, 8);
            l.expect(r.status() == Status::PASS, "orthogonality j=" + std::to_string(j) + " under " + d.describe());
            StirlingTable second(StirlingKind::SECOND, StirlingConfig{d, j, 0}, 12);
            for (long k = 0; k <= 12; ++k) {
                PowerSeries g = genfunc_second(StirlingConfig{d, j, 0}, k, 12);
                for (long n = 0; n <= 12; ++n)
                    l.expect(g[static_cast<std::size_t>(n)] == second(n, k),
                             "generating function j=" + std::to_string(j) + " k=" + std::to_string(k) + " n=" + std::to_string(n));
            }
        }
    }
    return {l.failed == 0, "q in {1/2,2/3,9/10}, " + l.mismatches()};
}

Outcome worked_example()
{
    Ledger l;
    Graph g = dual_path_graph(5);
    auto parts = independent_partitions(g, 4);
    const std::vector<IndependentPartition> expected{
        {{{1, 2}, {3}, {4}, {5}}}, {{{1}, {2, 3}, {4}, {5}}}, {{{1}, {2}, {3, 4}, {5}}}, {{{1}, {2}, {3}, {4, 5}}}};
    l.expect(parts.size() == expected.size(), "partition count " + std::to_string(parts.size()));
    for (std::size_t i = 0; i < expected.size(); ++i) {
        l.expect(std::find(parts.begin(), parts.end(), expected[i]) != parts.end(), "missing block pattern " + std::to_string(i + 1));
        l.expect(weight_exponent(expected[i]) == static_cast<long>(6 + i), "weight exponent " + std::to_string(i + 1));
    }
    for (const auto& d : {q_def(1, 2), pq_def(R(3, 4), R(1, 2)), quesne_def(R(3, 4), R(1, 2))}) {
        Scalar t = d.eps2 / d.eps1;
        l.expect(graph_stirling_second(d, g, 4) == pow(t, 6) * (1 - pow(t, 4)) / (1 - t), "closed sum under " + d.describe());
    }
    Scalar half = graph_stirling_second(q_def(1, 2), g, 4);
    l.expect(half == R(15, 512), "q=1/2 value " + to_string(half));
    return {l.failed == 0, "value at q=1/2 is " + to_string(half) + ", " + l.mismatches()};
}

Outcome dual_path_theorem()
{
    Ledger certified;
    std::size_t displayed_mismatch = 0;
    for (const auto& d : {q_def(1, 2), pq_def(R(3, 4), R(1, 2))})
        for (long n = 1; n <= 9; ++n)
            for (long k = 0; k <= n; ++k) {
                Scalar brute = graph_stirling_second(d, dual_path_graph(n), k);
                certified.expect(brute == dual_path_closed_form(d, n, k),
                                 d.describe() + " n=" + std::to_string(n) + " k=" + std::to_string(k));
                if (brute != dual_path_closed_form(d, n, k, ClosedForm::DISPLAYED)) ++displayed_mismatch;
            }

    // Quesne: record closed form / brute force per cell and test that every
    // ratio is a power of the unit.
    Deformation qu = quesne_def(R(3, 4), R(1, 2));
    std::size_t cells = 0, unit_powers = 0, displayed_quesne = 0;
    std::set<long> exponents;
    for (long n = 1; n <= 9; ++n)
        for (long k = 0; k <= n; ++k) {
            Scalar brute = graph_stirling_second(qu, dual_path_graph(n), k);
            if (brute == 0) continue;
            ++cells;
            Scalar ratio = dual_path_closed_form(qu, n, k) / brute;
            for (long e = -40; e <= 40; ++e)
                if (ratio == pow(qu.unit, e)) {
                    ++unit_powers;
                    exponents.insert(e);
                    break;
                }
            if (dual_path_closed_form(qu, n, k, ClosedForm::DISPLAYED) != brute) ++displayed_quesne;
        }
    bool pass = certified.failed == 0 && unit_powers == cells;
    std::string ratios;
    for (long e : exponents) ratios += (ratios.empty() ? "" : ",") + std::to_string(e);
    std::ostringstream detail;
    detail << "Q/PQ " << certified.mismatches() << "; Quesne " << unit_powers << "/" << cells
           << " cells with closed form / brute force = unit^e, e in {" << ratios
           << "}; typeset exponents of eps1 disagree in " << displayed_mismatch << " Q/PQ cells and "
           << displayed_quesne << " Quesne cells";
    return {pass, detail.str()};
}

Outcome moments_round_trip()
{
    Ledger l;
    const std::vector<Deformation> kinds{q_def(1, 2), pq_def(R(3, 4), R(1, 2)), quesne_def(R(3, 4), R(1, 2))};
    for (std::uint64_t seed = 1; seed <= 200; ++seed) {
        DiscreteDistribution dist = random_distribution(seed, 12);
        for (const auto& d : kinds) {
            bool ok = false;
            try {
                ok = distribution_from_binomial_moments(d, moment_vector(d, dist, MomentKind::BINOMIAL)) == dist;
            } catch (const Error&) {
            }
            l.expect(ok, "seed " + std::to_string(seed) + " under " + d.describe());
        }
        if (seed > 50) continue;
        for (long j = 1; j <= 6; ++j) {
            Scalar direct = classical_moments(dist, j).first;
            auto bridged = classical_moments_from_deformed(q_def(1, 2), dist, j);
            l.expect(bridged.first == direct && bridged.second == classical_moments(dist, j).second,
                     "classical bridge seed " + std::to_string(seed) + " j=" + std::to_string(j));
        }
    }
    return {l.failed == 0, "200 distributions x 3 kinds, bridge on 50 x j<=6, " + l.mismatches()};
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Outcome cli_contract()
{
    Ledger l;
    struct Golden {
        std::vector<std::string> args;
        std::string file;
    };
    const std::vector<Golden> goldens{
        {{"number", "--deformation", "q", "--q", "1/2", "--n", "3"}, "number_q_half_n3.txt"},
        {{"binomial", "--deformation", "q", "--q", "1/2", "--n", "4", "--k", "2", "--format", "json"}, "binomial_q_half_4_2.json"},
        {{"bell", "--deformation", "q", "--q", "1/2", "--dual-path", "5", "--k", "4"}, "bell_dual_path_5_4.txt"},
        {{"triangle", "--deformation", "q", "--q", "1/2", "--n", "2", "--type", "binomial", "--format", "csv"}, "triangle_binomial_2.csv"},
        {{"triangle", "--deformation", "q", "--q", "1/2", "--n", "2", "--type", "stirling2", "--format", "json"}, "triangle_stirling2_2.json"},
        {{"triangle", "--n", "0", "--type", "stirling1", "--format", "csv"}, "triangle_stirling1_0.csv"},
    };
    for (const auto& g : goldens) {
        std::string expected = slurp(std::string(PQCOMB_GOLDEN_DIR) + "/" + g.file);
        for (int rep = 0; rep < 2; ++rep) {
            std::ostringstream out, err;
            int status = cli::run(g.args, out, err);
            l.expect(status == cli::exit_ok && !expected.empty() && out.str() == expected, g.file);
        }
    }
    struct Exit {
        std::vector<std::string> args;
        int status;
    };
    const std::vector<Exit> exits{
        {{"frobnicate"}, cli::exit_usage},
        {{"number", "--n", "3", "--bogus"}, cli::exit_usage},
        {{"number", "--n", "3", "--q", "3/2"}, cli::exit_usage},
        {{"audit", "--only", "bellgraph"}, cli::exit_ok},
        {{"audit", "--only", "identities", "--identity", "ROTHE_2"}, cli::exit_audit_failed},
    };
    for (const auto& e : exits) {
        std::ostringstream out, err;
        int status = cli::run(e.args, out, err);
        l.expect(status == e.status, e.args.front() + " exit " + std::to_string(status));
    }
    return {l.failed == 0, std::to_string(goldens.size()) + " golden files twice each, " + std::to_string(exits.size()) +
                               " exit codes, " + l.mismatches()};
}

struct Criterion {
    int number;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "gaussian binomial oracle", 1, gaussian_oracle},
        {2, "exact identity audit, unit = 1", 30, exact_identity_audit},
        {3, "series convergence by 64 terms", 5, numeric_convergence},
        {4, "stirling ground truth", 5, stirling_ground_truth},
        {5, "five-vertex worked example", 1, worked_example},
        {6, "dual path closed form", 20, dual_path_theorem},
        {7, "moment inversion round trip", 10, moments_round_trip},
        {8, "cli determinism and exit codes", 60, cli_contract},
    };
    bool all = true;
    for (const auto& c : criteria) {
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool pass = o.pass && seconds <= c.budget_seconds;
        all = all && pass;
        std::printf("[%s] %d %s (%.2f s of %.0f s): %s\n", pass ? "PASS" : "FAIL", c.number, c.name.c_str(), seconds,
                    c.budget_seconds, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
