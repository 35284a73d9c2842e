/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/certificate.hh>
#include <ramsey/bounds.hh>
#include <ramsey/errors.hh>
#include <ramsey/hash.hh>
#include <ramsey/random.hh>
#include <ramsey/recipe.hh>
#include <ramsey/spectra.hh>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <sstream>

using namespace ramsey;

namespace
{
    auto parse_unsigned(std::string_view s, const std::string & what) -> unsigned
    {
        unsigned v = 0;
        auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
            throw InvalidArgument("bad " + what + " '" + std::string(s) + "'");
        return v;
    }

    auto join(const std::vector<Vertex> & vs) -> std::string
    {
        std::string out;
        for (std::size_t i = 0; i < vs.size(); ++i)
            out += (i ? "," : "") + std::to_string(vs[i]);
        return out;
    }

    auto format_double(double x) -> std::string
    {
        char buf[64];
        auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
        return std::string(buf, ptr);
    }
}

auto ForbiddenPattern::clique(unsigned s) -> ForbiddenPattern
{
    if (s < 2)
        throw InvalidArgument("forbidden clique needs s >= 2");
    return ForbiddenPattern{ PatternKind::clique, s, std::nullopt };
}

auto ForbiddenPattern::cycle(unsigned l) -> ForbiddenPattern
{
    if (l < 3 || l > 16)
        throw InvalidArgument("forbidden cycle length must be in 3 .. 16");
    return ForbiddenPattern{ PatternKind::cycle, l, std::nullopt };
}

auto ForbiddenPattern::explicit_graph(const Graph & g) -> ForbiddenPattern
{
    if (g.size() > max_pattern_size)
        throw SizeExceeded("explicit forbidden pattern has more than " + std::to_string(max_pattern_size) + " vertices");
    if (g.edge_count() == 0)
        throw InvalidArgument("explicit forbidden pattern needs at least one edge");
    return ForbiddenPattern{ PatternKind::explicit_graph, g.size(), make_graph(g.size(), g.edges()) };
}

auto ForbiddenPattern::descriptor() const -> std::string
{
    switch (kind) {
        case PatternKind::clique: return "K" + std::to_string(size);
        case PatternKind::cycle: return "C" + std::to_string(size);
        case PatternKind::explicit_graph: {
            std::string e;
            for (auto [u, v] : graph->edges())
                e += (e.empty() ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
            return "graph(n=" + std::to_string(size) + ";e=" + e + ")";
        }
    }
    return "";
}

auto ForbiddenPattern::claim_symbol() const -> std::string
{
    switch (kind) {
        case PatternKind::clique: return std::to_string(size);
        case PatternKind::cycle: return "C" + std::to_string(size);
        case PatternKind::explicit_graph: return "F";
    }
    return "";
}

auto ForbiddenPattern::method() const -> std::string
{
    switch (kind) {
        case PatternKind::clique: return "find_clique(s=" + std::to_string(size) + ")";
        case PatternKind::cycle: return "find_cycle(l=" + std::to_string(size) + ")";
        case PatternKind::explicit_graph:
            return "subgraph_embed(n=" + std::to_string(size) + ",m=" + std::to_string(graph->edge_count()) + ")";
    }
    return "";
}

auto ramsey::parse_pattern(const std::string & d) -> ForbiddenPattern
{
    if (d.size() >= 2 && (d[0] == 'K' || d[0] == 'C') && d.find('(') == std::string::npos) {
        auto s = parse_unsigned(std::string_view(d).substr(1), "pattern size");
        return d[0] == 'K' ? ForbiddenPattern::clique(s) : ForbiddenPattern::cycle(s);
    }

    const std::string prefix = "graph(n=";
    if (d.rfind(prefix, 0) != 0 || d.back() != ')')
        throw InvalidArgument("unrecognised pattern '" + d + "'");
    auto semi = d.find(";e=");
    if (semi == std::string::npos)
        throw InvalidArgument("pattern '" + d + "' has no edge list");
    auto n = parse_unsigned(std::string_view(d).substr(prefix.size(), semi - prefix.size()), "pattern order");
    if (n > max_pattern_size)
        throw SizeExceeded("explicit forbidden pattern has more than " + std::to_string(max_pattern_size) + " vertices");

    std::string_view list = std::string_view(d).substr(semi + 3, d.size() - semi - 4);
    GraphBuilder b(n);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= list.size() && ! list.empty(); ++i)
        if (i == list.size() || list[i] == ',') {
            auto item = list.substr(start, i - start);
            auto dash = item.find('-');
            if (dash == std::string_view::npos)
                throw InvalidArgument("bad pattern edge '" + std::string(item) + "'");
            b.add_edge(parse_unsigned(item.substr(0, dash), "vertex"), parse_unsigned(item.substr(dash + 1), "vertex"));
            start = i + 1;
        }
    auto p = ForbiddenPattern::explicit_graph(b.build());
    if (p.descriptor() != d)
        throw InvalidArgument("pattern '" + d + "' is not in canonical form (expected '" + p.descriptor() + "')");
    return p;
}

auto ramsey::check_free(const Graph & g, const ForbiddenPattern & p, std::uint64_t budget) -> FreenessResult
{
    FreenessResult r;
    r.method = p.method();
    std::optional<std::vector<Vertex>> hit;
    switch (p.kind) {
        case PatternKind::clique: hit = find_clique(g, p.size); break;
        case PatternKind::cycle: hit = find_cycle(g, p.size); break;
        case PatternKind::explicit_graph: hit = subgraph_embed(*p.graph, g, budget); break;
    }
    if (hit) {
        r.free = false;
        r.witness = *hit;
    }
    return r;
}

auto ramsey::claim_text(const ForbiddenPattern & p, std::uint64_t t, std::uint64_t n) -> std::string
{
    return "r(" + p.claim_symbol() + "," + std::to_string(t) + ") > " + std::to_string(n);
}

auto ramsey::certificate_digest(const RamseyCertificate & c) -> std::string
{
    std::ostringstream s;
    s << "claim=" << c.claim << '\n'
        << "forbidden=" << c.forbidden << '\n'
        << "provenance=" << c.provenance << '\n'
        << "family=" << c.family << '\n';
    for (auto & [k, v] : c.parameters)
        s << "parameter." << k << '=' << v << '\n';
    for (auto & t : c.transformations)
        s << "transformation=" << t << '\n';
    for (auto seed : c.seeds)
        s << "seed=" << seed << '\n';
    s << "n=" << c.n << '\n'
        << "t=" << c.t << '\n'
        << "alpha=" << c.alpha << '\n'
        << "alpha_mode=" << c.alpha_mode << '\n'
        << "alpha_witness=" << join(c.alpha_witness) << '\n'
        << "freeness_method=" << c.freeness_method << '\n';
    if (c.sampling) {
        auto & r = *c.sampling;
        s << "sampling.host_provenance=" << r.host_provenance << '\n'
            << "sampling.host_n=" << r.host_n << '\n'
            << "sampling.seed=" << r.seed << '\n'
            << "sampling.lambda=" << format_double(r.lambda) << '\n'
            << "sampling.lambda_source=" << r.lambda_source << '\n'
            << "sampling.p_formula=" << format_double(r.p_formula) << '\n'
            << "sampling.p=" << format_double(r.p) << '\n'
            << "sampling.p_overridden=" << r.p_overridden << '\n'
            << "sampling.sampled=" << join(r.sampled) << '\n'
            << "sampling.removed=" << join(r.removed) << '\n'
            << "sampling.threshold_t=" << r.threshold_t << '\n'
            << "sampling.t_meets_threshold=" << r.t_meets_threshold << '\n';
    }
    s << "edge_hash=" << c.edge_hash << '\n'
        << "tool_version=" << c.tool_version << '\n';
    return hash_to_hex(fnv1a64(s.str()));
}

namespace
{
    auto exact_alpha(const Graph & g, std::uint64_t budget) -> IndependenceResult
    {
        IndependenceOptions o;
        o.mode = IndependenceMode::exact;
        o.budget = budget;
        auto r = independence_number(g, o);
        if (! r.exact)
            throw BudgetExhausted("exact independence number exceeded its budget on " + std::to_string(g.size())
                    + " vertices (bounds " + std::to_string(r.alpha) + " .. " + std::to_string(r.upper_bound) + ")");
        return r;
    }

    auto fill_witness_fields(RamseyCertificate & c, const Graph & g, const ForbiddenPattern & p,
            const IndependenceResult & alpha, std::uint64_t t) -> void
    {
        auto recipe = parse_recipe(g.provenance());
        c.forbidden = p.descriptor();
        c.provenance = g.provenance();
        c.family = recipe.family.name;
        c.parameters = recipe_parameters(recipe);
        c.transformations.clear();
        c.seeds.clear();
        for (auto & step : recipe.steps) {
            c.transformations.push_back(step.text());
            if (step.name == "block")
                c.seeds.push_back(std::stoull(step.arguments.at(0).second));
        }
        c.n = g.size();
        c.t = t;
        c.alpha = alpha.alpha;
        c.alpha_mode = "exact";
        c.alpha_witness = alpha.witness;
        c.freeness_method = p.method();
        c.claim = claim_text(p, t, c.n);
        c.edge_hash = hash_to_hex(edge_list_hash(g));
        c.tool_version = tool_version;
    }
}

auto ramsey::certify(const Graph & g, const ForbiddenPattern & p, std::optional<std::uint64_t> t,
        const CertifyOptions & options) -> CertifyResult
{
    CertifyResult result;

    std::optional<Graph> rebuilt;
    try {
        rebuilt = rebuild_graph(g.provenance());
    }
    catch (const std::exception & e) {
        result.refusal = "provenance '" + g.provenance() + "' cannot be rebuilt: " + e.what();
        return result;
    }
    if (rebuilt->size() != g.size() || ! rebuilt->same_edges(g)) {
        result.refusal = "provenance '" + g.provenance() + "' does not rebuild this graph";
        return result;
    }

    auto freeness = check_free(g, p, options.pattern_budget);
    if (! freeness.free) {
        result.refusal = "graph contains " + p.descriptor();
        result.witness = freeness.witness;
        return result;
    }

    auto alpha = exact_alpha(g, options.alpha_budget);
    std::uint64_t chosen_t = t.value_or(alpha.alpha + 1);
    if (chosen_t < 1)
        throw InvalidArgument("t must be at least 1");
    if (alpha.alpha >= chosen_t) {
        result.refusal = "independent set of size " + std::to_string(alpha.alpha) + " >= t = " + std::to_string(chosen_t);
        result.witness = alpha.witness;
        return result;
    }

    RamseyCertificate c;
    fill_witness_fields(c, g, p, alpha, chosen_t);
    c.digest = certificate_digest(c);
    result.certificate = c;
    return result;
}

auto ramsey::sample_ramsey_graph(const Graph & g, const ForbiddenPattern & p, std::uint64_t t,
        std::optional<double> p_override, std::uint64_t seed, std::optional<double> lambda,
        const CertifyOptions & options) -> RamseyCertificate
{
    if (t < 1)
        throw InvalidArgument("t must be at least 1");
    if (g.size() < 2)
        throw InvalidArgument("sampling needs a host with at least two vertices");
    if (p_override && ! (*p_override >= 0.0 && *p_override <= 1.0))
        throw InvalidArgument("probability override must lie in [0, 1]");
    if (lambda && ! (*lambda > 0.0 && std::isfinite(*lambda)))
        throw InvalidArgument("lambda must be positive");

    auto freeness = check_free(g, p, options.pattern_budget);
    if (! freeness.free)
        throw InvalidArgument("host contains " + p.descriptor() + "; refusing to sample");

    auto report = ndl_report(g);

    SamplingRecord rec;
    rec.host_provenance = g.provenance();
    rec.host_n = g.size();
    rec.seed = seed;
    rec.lambda = lambda ? *lambda : report.lambda;
    rec.lambda_source = lambda ? "supplied" : "spectrum";
    rec.p_formula = rec.lambda > 0.0 ? raw_sampling_probability(g.size(), rec.lambda) : 1.0;
    rec.p = p_override ? *p_override : std::min(1.0, rec.p_formula);
    rec.p_overridden = p_override.has_value();
    if (report.d > 0) {
        double ln_n = std::log(double(g.size()));
        rec.threshold_t = static_cast<std::uint64_t>(std::ceil(2.0 * double(g.size()) * ln_n * ln_n / double(report.d)));
        rec.t_meets_threshold = t >= rec.threshold_t;
    }

    Xoshiro256 rng(seed);
    for (Vertex v = 0; v < g.size(); ++v)
        if (rng.uniform() < rec.p)
            rec.sampled.push_back(v);

    std::vector<Vertex> kept = rec.sampled;
    IndependenceResult alpha;
    while (true) {
        alpha = exact_alpha(induced_subgraph(g, kept), options.alpha_budget);
        if (alpha.alpha < t)
            break;
        Vertex victim = kept[alpha.witness.front()];
        rec.removed.push_back(victim);
        kept.erase(kept.begin() + alpha.witness.front());
    }

    auto final_graph = induced_subgraph(g, kept);
    RamseyCertificate c;
    fill_witness_fields(c, final_graph, p, alpha, t);
    c.sampling = rec;
    c.digest = certificate_digest(c);
    return c;
}

auto ramsey::verify_certificate(const RamseyCertificate & c, const CertifyOptions & options) -> VerificationReport
{
    VerificationReport report;
    auto check = [&](const std::string & name, bool ok) {
        report.checks.emplace_back(name, ok);
    };
    auto passing = [&] {
        return std::all_of(report.checks.begin(), report.checks.end(), [](auto & c) { return c.second; });
    };
    auto stop = [&] {
        report.error = "stopped after a failed check; later checks not run";
        return report;
    };

    check("digest", certificate_digest(c) == c.digest);
    check("tool_version", c.tool_version == tool_version);

    try {
        auto pattern = parse_pattern(c.forbidden);
        check("pattern_descriptor", pattern.descriptor() == c.forbidden);

        auto recipe = parse_recipe(c.provenance);
        std::vector<std::string> steps;
        std::vector<std::uint64_t> seeds;
        for (auto & s : recipe.steps) {
            steps.push_back(s.text());
            if (s.name == "block")
                seeds.push_back(std::stoull(s.arguments.at(0).second));
        }
        check("provenance_fields", recipe.family.name == c.family && recipe_parameters(recipe) == c.parameters
                && steps == c.transformations && seeds == c.seeds);

        auto g = rebuild_graph(c.provenance);
        check("vertex_count", g.size() == c.n);
        check("edge_hash", hash_to_hex(edge_list_hash(g)) == c.edge_hash);
        check("claim", c.t >= 1 && c.claim == claim_text(pattern, c.t, c.n));

        if (! passing())
            return stop();

        auto freeness = check_free(g, pattern, options.pattern_budget);
        check("freeness", freeness.free && freeness.method == c.freeness_method);

        check("alpha_witness", c.alpha_witness.size() == c.alpha
                && std::all_of(c.alpha_witness.begin(), c.alpha_witness.end(), [&](Vertex v) { return v < g.size(); })
                && is_independent(g, c.alpha_witness));
        check("alpha_mode", c.alpha_mode == "exact" && c.alpha + 1 <= c.t);
        if (! passing())
            return stop();

        auto alpha = exact_alpha(g, options.alpha_budget);
        check("alpha", alpha.alpha == c.alpha);

        if (c.sampling && ! passing())
            return stop();
        if (c.sampling) {
            auto host = rebuild_graph(c.sampling->host_provenance);
            std::optional<double> override;
            if (c.sampling->p_overridden)
                override = c.sampling->p;
            std::optional<double> supplied;
            if (c.sampling->lambda_source == "supplied")
                supplied = c.sampling->lambda;
            else if (c.sampling->lambda_source != "spectrum")
                throw InvalidArgument("unknown lambda source '" + c.sampling->lambda_source + "'");
            auto again = sample_ramsey_graph(host, pattern, c.t, override, c.sampling->seed, supplied, options);
            check("sampling_rerun", again.sampling == c.sampling && again.provenance == c.provenance);
        }
    }
    catch (const std::exception & e) {
        report.error = e.what();
        check("reconstruction", false);
    }

    report.ok = std::all_of(report.checks.begin(), report.checks.end(), [](auto & c) { return c.second; });
    return report;
}
