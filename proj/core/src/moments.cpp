#include "pqcomb/moments.hpp"

#include "pqcomb/errors.hpp"
#include "pqcomb/poly.hpp"
#include "pqcomb/stirling.hpp"

#include <json.hpp>

#include <random>

namespace pqcomb {

namespace {

using ojson = nlohmann::ordered_json;

long parse_point(const std::string& key)
{
    std::size_t used = 0;
    long x = 0;
    try {
        x = std::stol(key, &used);
    } catch (const std::exception&) {
        throw ParseError("expected an integer key, got \"" + key + "\"");
    }
    if (used != key.size()) throw ParseError("expected an integer key, got \"" + key + "\"");
    return x;
}

Scalar parse_value(const ojson& v)
{
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long>());
    throw ParseError("values must be rational strings such as \"1/2\" or integers");
}

ojson parse_document(std::string_view text)
{
    try {
        return ojson::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(e.what());
    }
}

template <typename F>
Scalar expectation(const DiscreteDistribution& dist, F&& f)
{
    Scalar sum = 0;
    for (const auto& [x, p] : dist.probabilities()) sum += f(x) * p;
    return sum;
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(const std::map<long, Scalar>& probs)
{
    Scalar total = 0;
    for (const auto& [x, p] : probs) {
        if (x < 0) throw DomainViolation("support points must be nonnegative, got " + std::to_string(x));
        if (p < 0) throw DomainViolation("negative probability at " + std::to_string(x));
        total += p;
        if (p > 0) probs_.emplace(x, p);
    }
    if (probs_.empty()) throw DomainViolation("distribution has empty support");
    if (total != 1) throw DomainViolation("probabilities sum to " + to_string(total) + ", not 1");
}

Scalar DiscreteDistribution::probability(long x) const
{
    auto it = probs_.find(x);
    return it == probs_.end() ? Scalar(0) : it->second;
}

bool operator==(const DiscreteDistribution& a, const DiscreteDistribution& b)
{
    return a.probabilities() == b.probabilities();
}

DiscreteDistribution parse_distribution_json(std::string_view text)
{
    ojson doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("probs") || !doc["probs"].is_object())
        throw ParseError("distribution: expected an object with field \"probs\"");
    std::map<long, Scalar> probs;
    for (const auto& [key, value] : doc["probs"].items()) {
        long x = parse_point(key);
        if (probs.count(x)) throw ParseError("distribution: duplicate point " + key);
        probs.emplace(x, parse_value(value));
    }
    return DiscreteDistribution(probs);
}

std::string distribution_to_json(const DiscreteDistribution& dist, int indent)
{
    ojson probs = ojson::object();
    for (const auto& [x, p] : dist.probabilities()) probs[std::to_string(x)] = to_string(p);
    ojson doc = ojson::object();
    doc["probs"] = probs;
    return doc.dump(indent);
}

DiscreteDistribution point_mass(long x) { return DiscreteDistribution({{x, Scalar(1)}}); }

DiscreteDistribution uniform_distribution(const std::vector<long>& points)
{
    if (points.empty()) throw DomainViolation("uniform distribution needs at least one point");
    std::map<long, Scalar> probs;
    for (long x : points) probs[x] += Scalar(1, static_cast<unsigned long>(points.size()));
    return DiscreteDistribution(probs);
}

DiscreteDistribution random_distribution(std::uint64_t seed, long max_point)
{
    if (max_point < 0) throw DomainViolation("max_point must be nonnegative");
    std::mt19937_64 rng(seed);
    std::map<long, Scalar> weights;
    Scalar total = 0;
    for (long x = 0; x <= max_point; ++x) {
        if (rng() % 2 == 0) continue;
        Scalar w(static_cast<long>(1 + rng() % 97));
        weights.emplace(x, w);
        total += w;
    }
    if (weights.empty()) {
        weights.emplace(static_cast<long>(rng() % static_cast<std::uint64_t>(max_point + 1)), Scalar(1));
        total = 1;
    }
    for (auto& [x, w] : weights) w /= total;
    return DiscreteDistribution(weights);
}

std::string moment_vector_to_json(const MomentVector& mv, int indent)
{
    ojson order = ojson::object();
    for (std::size_t r = 0; r < mv.values.size(); ++r) order[std::to_string(r)] = to_string(mv.values[r]);
    ojson doc = ojson::object();
    doc["kind"] = mv.kind == MomentKind::BINOMIAL ? "binomial" : "factorial";
    doc["order"] = order;
    return doc.dump(indent);
}

MomentVector parse_moment_vector_json(std::string_view text)
{
    ojson doc = parse_document(text);
    if (!doc.is_object() || !doc.contains("order") || !doc["order"].is_object())
        throw ParseError("moments: expected an object with field \"order\"");
    MomentVector mv;
    if (doc.contains("kind")) {
        const std::string kind = doc["kind"].is_string() ? doc["kind"].get<std::string>() : "";
        if (kind == "binomial")
            mv.kind = MomentKind::BINOMIAL;
        else if (kind == "factorial")
            mv.kind = MomentKind::FACTORIAL;
        else
            throw ParseError("moments: kind must be \"binomial\" or \"factorial\"");
    }
    std::map<long, Scalar> values;
    for (const auto& [key, value] : doc["order"].items()) {
        long r = parse_point(key);
        if (r < 0) throw ParseError("moments: negative order " + key);
        values[r] = parse_value(value);
    }
    if (!values.empty()) mv.values.assign(static_cast<std::size_t>(values.rbegin()->first + 1), Scalar(0));
    for (const auto& [r, v] : values) mv.values[static_cast<std::size_t>(r)] = v;
    return mv;
}

Scalar deformed_factorial_moment(const Deformation& d, const DiscreteDistribution& dist, long r)
{
    if (r < 0) throw NegativeArgument("moment order must be nonnegative");
    return expectation(dist, [&](long x) { return ordered_factorial(d, x, r); });
}

Scalar deformed_binomial_moment(const Deformation& d, const DiscreteDistribution& dist, long r)
{
    if (r < 0) throw NegativeArgument("moment order must be nonnegative");
    return expectation(dist, [&](long x) { return deformed_binomial(d, x, r); });
}

MomentVector moment_vector(const Deformation& d, const DiscreteDistribution& dist, MomentKind kind)
{
    MomentVector mv{kind, {}};
    for (long r = 0; r <= dist.max_point(); ++r)
        mv.values.push_back(kind == MomentKind::BINOMIAL ? deformed_binomial_moment(d, dist, r)
                                                         : deformed_factorial_moment(d, dist, r));
    return mv;
}

MeanVariance deformed_mean_variance(const Deformation& d, const DiscreteDistribution& dist)
{
    Scalar mean = expectation(dist, [&](long x) { return number(d, x); });
    Scalar square = expectation(dist, [&](long x) {
        Scalar n = number(d, x);
        return Scalar(n * n);
    });
    return {mean, square - mean * mean};
}

Scalar variance_decomposition(const Deformation& d, const DiscreteDistribution& dist, long unit_power)
{
    Scalar mean = expectation(dist, [&](long x) { return number(d, x); });
    Scalar falling = deformed_factorial_moment(d, dist, 2);
    Scalar mixed = expectation(dist, [&](long x) { return Scalar(pow(d.eps1, x - 1) * number(d, x)); });
    return d.eps2 * falling + pow(d.unit, unit_power) * mixed - mean * mean;
}

std::pair<Scalar, Scalar> classical_moments_from_deformed(const Deformation& d, const DiscreteDistribution& dist, long j,
                                                          long tau)
{
    if (j < 1) throw DomainViolation("classical moment order must be >= 1");
    const long top = dist.max_point();
    Scalar binomial = 0;
    if (j <= top) {
        StirlingTable s(StirlingKind::FIRST, StirlingConfig{d, 0, tau}, top);
        for (long m = j; m <= top; ++m) binomial += classical_bridge_weight(s, m, j) * deformed_binomial_moment(d, dist, m);
    }
    return {binomial, binomial * classical_factorial(j)};
}

std::pair<Scalar, Scalar> classical_moments(const DiscreteDistribution& dist, long j)
{
    if (j < 1) throw DomainViolation("classical moment order must be >= 1");
    Scalar binomial = expectation(dist, [&](long x) { return classical_binomial(x, j); });
    return {binomial, binomial * classical_factorial(j)};
}

std::vector<Scalar> invert_binomial_moments(const Deformation& d, const MomentVector& mv, ClosedForm form)
{
    if (mv.kind != MomentKind::BINOMIAL) throw DomainViolation("inversion needs binomial moments");
    const std::size_t len = mv.values.size();
    std::vector<Scalar> coeff(len);
    if (form == ClosedForm::CERTIFIED && len > 0) {
        // Exponential-type series sum_k z^k/[k]! and its reciprocal.
        PowerSeries e(len - 1);
        for (std::size_t k = 0; k < len; ++k) e[k] = 1 / deformed_factorial(d, static_cast<long>(k));
        PowerSeries inv = e.reciprocal();
        for (std::size_t i = 0; i < len; ++i) coeff[i] = inv[i] * deformed_factorial(d, static_cast<long>(i));
    }
    std::vector<Scalar> g(len);
    for (std::size_t x = 0; x < len; ++x) {
        const long xl = static_cast<long>(x);
        Scalar sum = 0;
        for (std::size_t m = x; m < len; ++m) {
            const long i = static_cast<long>(m - x);
            Scalar c = form == ClosedForm::CERTIFIED
                           ? coeff[m - x]
                           : Scalar((i % 2 == 0 ? 1 : -1) * pow(d.eps1, choose2(xl)) * pow(d.eps2, choose2(i)));
            sum += c * deformed_binomial(d, static_cast<long>(m), xl) * mv.values[m];
        }
        g[x] = sum;
    }
    return g;
}

DiscreteDistribution distribution_from_binomial_moments(const Deformation& d, const MomentVector& mv)
{
    std::vector<Scalar> g = invert_binomial_moments(d, mv, ClosedForm::CERTIFIED);
    std::map<long, Scalar> probs;
    Scalar total = 0;
    for (std::size_t x = 0; x < g.size(); ++x) {
        if (g[x] < 0) throw InconsistentMoments("reconstructed probability at " + std::to_string(x) + " is " + to_string(g[x]));
        total += g[x];
        if (g[x] != 0) probs.emplace(static_cast<long>(x), g[x]);
    }
    if (total != 1) throw InconsistentMoments("reconstructed probabilities sum to " + to_string(total));
    return DiscreteDistribution(probs);
}

std::vector<CheckReport> moments_audit(const Deformation& d)
{
    std::vector<std::pair<std::string, DiscreteDistribution>> samples{
        {"point0", point_mass(0)},
        {"point3", point_mass(3)},
        {"uniform01", uniform_distribution({0, 1})},
        {"uniform02", uniform_distribution({0, 2})},
        {"uniform012", uniform_distribution({0, 1, 2})},
    };
    for (std::uint64_t seed = 1; seed <= 8; ++seed)
        samples.emplace_back("random" + std::to_string(seed), random_distribution(seed, 12));

    const std::string desc = d.describe();
    std::vector<CheckReport> out;

    {
        FormTally t;
        for (const auto& [name, dist] : samples)
            for (long r = 0; r <= dist.max_point() + 1; ++r)
                t.compare({{"dist", name}, {"r", r}}, deformed_factorial_moment(d, dist, r),
                          deformed_factorial(d, r) * deformed_binomial_moment(d, dist, r));
        out.push_back(make_report("MOMENT_FACTORIAL_BINOMIAL", "fb2", Mode::EXACT, desc, t, nullptr,
                                  {"E([X]_r) against [r]! E([X over r])"}));
    }

    {
        FormTally t;
        for (const auto& [name, dist] : samples) {
            Scalar variance = deformed_mean_variance(d, dist).variance;
            Params p{{"dist", name}};
            if (variance == variance_decomposition(d, dist, 0))
                t.pass();
            else if (variance == variance_decomposition(d, dist, 1))
                t.pass_corrected();
            else
                t.fail(p, variance, variance_decomposition(d, dist, 0));
        }
        out.push_back(make_report("VARIANCE_DECOMPOSITION", "var", Mode::EXACT, desc, t, nullptr,
                                  {"E([X]^2) - mean^2 against eps2 E([X]_2) + E(eps1^{X-1}[X]) - mean^2",
                                   "the mixed term carries a factor unit when unit != 1"}));
    }

    {
        FormTally binomial, factorial;
        for (long tau : {0L, 1L})
            for (const auto& [name, dist] : samples)
                for (long j = 1; j <= 6; ++j) {
                    Params p{{"dist", name}, {"j", j}, {"tau", tau}};
                    auto direct = classical_moments(dist, j);
                    auto bridged = classical_moments_from_deformed(d, dist, j, tau);
                    binomial.compare(p, direct.first, bridged.first);
                    factorial.compare(p, direct.second, bridged.second);
                }
        std::vector<std::string> notes{"evaluated as displayed; grading tau in {0, 1}"};
        out.push_back(make_report("CLASSICAL_BINOMIAL_MOMENT", "fb6", Mode::EXACT, desc, binomial, nullptr, notes));
        out.push_back(make_report("CLASSICAL_FACTORIAL_MOMENT", "fb7", Mode::EXACT, desc, factorial, nullptr, notes));
    }

    {
        FormTally certified, displayed;
        for (const auto& [name, dist] : samples) {
            MomentVector mv = moment_vector(d, dist, MomentKind::BINOMIAL);
            auto cert = invert_binomial_moments(d, mv, ClosedForm::CERTIFIED);
            auto disp = invert_binomial_moments(d, mv, ClosedForm::DISPLAYED);
            for (std::size_t x = 0; x < cert.size(); ++x) {
                Params p{{"dist", name}, {"x", static_cast<long>(x)}};
                certified.compare(p, dist.probability(static_cast<long>(x)), cert[x]);
                displayed.compare(p, dist.probability(static_cast<long>(x)), disp[x]);
            }
        }
        out.push_back(make_report(
            "MOMENT_INVERSION", "fb9", Mode::EXACT, desc, certified, &displayed,
            {"certified weights c_i = [i]! [z^i] (sum_k z^k/[k]!)^{-1}",
             "displayed weights (-1)^i eps1^{C(x,2)} eps2^{C(i,2)} agree with the certified ones when eps1 = 1"}));
    }
    return out;
}

}  // namespace pqcomb
