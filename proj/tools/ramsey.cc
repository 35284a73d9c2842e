/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/atlas.hh>
#include <ramsey/block.hh>
#include <ramsey/bounds.hh>
#include <ramsey/certificate.hh>
#include <ramsey/errors.hh>
#include <ramsey/graphcore.hh>
#include <ramsey/hash.hh>
#include <ramsey/io.hh>
#include <ramsey/patterns.hh>
#include <ramsey/spectra.hh>

#include "CLI11.hpp"
#include "json.hpp"

#include <filesystem>
#include <iostream>
#include <variant>

using namespace ramsey;
using Json = nlohmann::ordered_json;

namespace
{
    constexpr int exit_failure = 1;
    constexpr int exit_usage = 2;

    auto print(const Json & j) -> void
    {
        std::cout << j.dump(2) << '\n';
    }

    auto graph_summary(const Graph & g) -> Json
    {
        return Json{ { "n", g.size() }, { "m", g.edge_count() }, { "provenance", g.provenance() },
            { "edge_hash", hash_to_hex(edge_list_hash(g)) } };
    }

    /// A pattern descriptor (K4, C5, graph(...)) or a graph file.
    auto load_pattern(const std::string & text) -> ForbiddenPattern
    {
        if (std::filesystem::exists(text))
            return ForbiddenPattern::explicit_graph(load_graph(text).graph);
        return parse_pattern(text);
    }

    auto load_base(const std::string & text) -> Graph
    {
        if (std::filesystem::exists(text))
            return load_graph(text).graph;
        auto p = parse_pattern(text);
        switch (p.kind) {
            case PatternKind::clique: return complete_graph(p.size);
            case PatternKind::cycle: return cycle_graph(p.size);
            case PatternKind::explicit_graph: return *p.graph;
        }
        return *p.graph;
    }

    struct Construct
    {
        std::string family, out;
        std::uint64_t q = 0, k = 0, n = 0;

        auto run() const -> int
        {
            auto made = build();
            if (auto b = std::get_if<BipartiteGraph>(&made)) {
                save_graph(out, b->to_graph(), b->left_size());
                auto j = graph_summary(b->to_graph());
                j["bipartite"] = { b->left_size(), b->right_size() };
                print(j);
            }
            else {
                auto & g = std::get<Graph>(made);
                save_graph(out, g);
                print(graph_summary(g));
            }
            return 0;
        }

        auto need(std::uint64_t v, const char * flag) const -> std::uint64_t
        {
            if (v == 0)
                throw InvalidArgument(family + " needs " + flag);
            return v;
        }

        auto build() const -> std::variant<Graph, BipartiteGraph>
        {
            if (family == "paley")
                return { paley(need(q, "--q")) };
            if (family == "er_polarity")
                return { er_polarity(need(q, "--q")) };
            if (family == "pg_incidence")
                return { pg_incidence(need(q, "--q")) };
            if (family == "gq_incidence")
                return { gq_incidence(need(q, "--q")) };
            if (family == "dkq")
                return { dkq(unsigned(need(k, "--k")), need(q, "--q")) };
            if (family == "cycle")
                return { cycle_graph(unsigned(need(n, "--n"))) };
            if (family == "path")
                return { path_graph(unsigned(need(n, "--n"))) };
            if (family == "complete")
                return { complete_graph(unsigned(need(n, "--n"))) };
            if (family == "petersen")
                return { petersen_graph() };
            throw InvalidArgument("unknown family '" + family + "'");
        }
    };

    auto parse_s_values(const std::string & text) -> std::vector<unsigned>
    {
        std::vector<unsigned> out;
        std::size_t start = 0;
        while (start < text.size()) {
            auto comma = text.find(',', start);
            if (comma == std::string::npos)
                comma = text.size();
            out.push_back(unsigned(std::stoul(text.substr(start, comma - start))));
            start = comma + 1;
        }
        return out;
    }

    auto report_json(const SpectralReport & r, const Graph & g) -> Json
    {
        Json j = graph_summary(g);
        j["is_regular"] = r.is_regular;
        j["d"] = r.d;
        Json profile = Json::object();
        for (auto [deg, count] : r.degree_profile)
            profile[std::to_string(deg)] = count;
        j["degree_profile"] = profile;
        j["lambda"] = r.lambda;
        j["lambda_definition"] = "max |eigenvalue| after removing one copy of the largest";
        j["bipartite"] = r.bipartite;
        Json ssv = Json::object();
        for (auto [s, v] : r.ssv_ratio)
            ssv[std::to_string(s)] = v;
        j["ssv_ratio"] = ssv;
        j["ssv_ratio_formula"] = "lambda * n^(s-2) / d^(s-1)";
        j["trace_cube"] = r.trace_cube;
        auto tc = trace_cube_check(g, r);
        if (tc.applicable)
            j["trace_cube_check"] = { { "trace", tc.trace }, { "d_cubed", tc.d_cubed },
                { "lower_bound", tc.lower_bound }, { "formula", "d^3 - lambda^3 (n - 1)" }, { "pass", tc.pass } };
        else
            j["trace_cube_check"] = "not applicable (irregular graph)";
        return j;
    }

    auto certificate_summary(const RamseyCertificate & c, const std::string & path) -> Json
    {
        Json j{ { "claim", c.claim }, { "n", c.n }, { "t", c.t }, { "alpha", c.alpha },
            { "freeness_method", c.freeness_method }, { "edge_hash", c.edge_hash }, { "certificate", path } };
        if (c.sampling)
            j["sampling"] = { { "seed", c.sampling->seed }, { "lambda", c.sampling->lambda },
                { "lambda_source", c.sampling->lambda_source }, { "p_formula", c.sampling->p_formula },
                { "p", c.sampling->p }, { "sampled", c.sampling->sampled.size() },
                { "removed", c.sampling->removed.size() }, { "threshold_t", c.sampling->threshold_t } };
        return j;
    }
}

auto main(int argc, char * argv[]) -> int
{
    CLI::App app{ "Ramsey lower-bound toolkit: pseudorandom and algebraic constructions, certificates." };
    app.require_subcommand(1);

    Construct construct;
    auto c_cmd = app.add_subcommand("construct", "Build a named graph and write it in DIMACS form");
    c_cmd->add_option("family", construct.family,
            "paley | er_polarity | pg_incidence | gq_incidence | dkq | cycle | path | complete | petersen")->required();
    c_cmd->add_option("--q", construct.q, "Field order");
    c_cmd->add_option("--k", construct.k, "D(k,q) length");
    c_cmd->add_option("--n", construct.n, "Order of cycle, path or complete graph");
    c_cmd->add_option("--out", construct.out, "Output file")->required();

    std::string graph_file;
    auto spec_cmd = app.add_subcommand("spectrum", "Adjacency eigenvalues, descending");
    spec_cmd->add_option("graph", graph_file)->required();

    std::string s_values;
    auto ndl_cmd = app.add_subcommand("ndl", "(n,d,lambda) report");
    ndl_cmd->add_option("graph", graph_file)->required();
    ndl_cmd->add_option("--s", s_values, "Comma-separated s values for lambda n^(s-2) / d^(s-1)");

    auto girth_cmd = app.add_subcommand("girth", "Length of a shortest cycle");
    girth_cmd->add_option("graph", graph_file)->required();

    bool lower = false, exact = false;
    std::uint64_t seed = 0, budget = default_search_budget;
    unsigned restarts = 50;
    auto alpha_cmd = app.add_subcommand("alpha", "Independence number");
    alpha_cmd->add_option("graph", graph_file)->required();
    auto exact_flag = alpha_cmd->add_flag("--exact", exact, "Branch and bound (default)");
    auto lower_flag = alpha_cmd->add_flag("--lower", lower, "Randomised local search lower bound");
    exact_flag->excludes(lower_flag);
    auto alpha_seed = alpha_cmd->add_option("--seed", seed, "Seed for --lower");
    lower_flag->needs(alpha_seed);
    alpha_cmd->add_option("--budget", budget, "Search node budget");
    alpha_cmd->add_option("--restarts", restarts, "Local search restarts for --lower");

    std::string forbid;
    auto free_cmd = app.add_subcommand("free", "Check a graph for a forbidden subgraph");
    free_cmd->add_option("graph", graph_file)->required();
    free_cmd->add_option("--forbid", forbid, "K<s>, C<l>, graph(n=..;e=..) or a pattern file")->required();

    std::string base;
    auto lf_cmd = app.add_subcommand("lf", "List the family L(F) of F_P graphs over path partitions");
    lf_cmd->add_option("--base", base, "K<s>, C<l>, graph(...) or a graph file")->required();

    std::string host_file, out;
    auto block_cmd = app.add_subcommand("block", "Random complete-bipartite overlay inside every N(u)");
    block_cmd->add_option("--host", host_file, "Bipartite host file")->required();
    block_cmd->add_option("--seed", seed)->required();
    block_cmd->add_option("--out", out)->required();

    std::uint64_t t = 0;
    double p = -1, lambda = -1;
    auto sample_cmd = app.add_subcommand("sample", "Random induced subgraph with no independent t-set");
    sample_cmd->add_option("graph", graph_file)->required();
    sample_cmd->add_option("--forbid", forbid)->required();
    sample_cmd->add_option("--t", t)->required();
    sample_cmd->add_option("--p", p, "Override the sampling probability");
    sample_cmd->add_option("--lambda", lambda, "Use this lambda instead of the spectral one");
    sample_cmd->add_option("--seed", seed)->required();
    sample_cmd->add_option("--out", out, "Certificate file")->required();
    sample_cmd->add_option("--budget", budget, "Search node budget");

    auto certify_cmd = app.add_subcommand("certify", "Certify r(F,t) > n for an F-free graph");
    certify_cmd->add_option("graph", graph_file)->required();
    certify_cmd->add_option("--forbid", forbid)->required();
    certify_cmd->add_option("--t", t, "Default: alpha + 1");
    certify_cmd->add_option("--out", out, "Certificate file")->required();
    certify_cmd->add_option("--budget", budget, "Search node budget");

    std::string cert_file;
    auto verify_cmd = app.add_subcommand("verify", "Re-check a certificate from scratch");
    verify_cmd->add_option("certificate", cert_file)->required();
    verify_cmd->add_option("--budget", budget, "Search node budget");

    std::uint64_t n = 0, d = 0;
    auto ar_cmd = app.add_subcommand("ar-bound", "Counting bound on independent t-sets in an (n,d,lambda)-graph");
    ar_cmd->add_option("--n", n)->required();
    ar_cmd->add_option("--d", d)->required();
    ar_cmd->add_option("--lambda", lambda)->required();
    ar_cmd->add_option("--t", t)->required();

    std::string mode = "theorem5", fm, fn, fd, fq, ft, t_scale;
    auto feas_cmd = app.add_subcommand("feasibility", "Sign of t log2 n + m - c t (exact)");
    feas_cmd->add_option("--mode", mode, "theorem5 (c = d) or hexagon (c = q + 1)")
        ->check(CLI::IsMember({ "theorem5", "hexagon" }));
    feas_cmd->add_option("--m", fm, "Default in hexagon mode: (q+1)(q^8+q^4+1)");
    feas_cmd->add_option("--n", fn, "Default in hexagon mode: (q^3+1)(q^8+q^4+1)");
    feas_cmd->add_option("--d", fd);
    feas_cmd->add_option("--q", fq);
    auto t_opt = feas_cmd->add_option("--t", ft);
    auto scale_opt = feas_cmd->add_option("--t-scale", t_scale, "t = ceil(a/b * q^8), given as a/b");
    t_opt->excludes(scale_opt);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::CallForHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::CallForAllHelp & e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError & e) {
        app.exit(e);
        return exit_usage;
    }

    try {
        CertifyOptions options;
        options.alpha_budget = budget;

        if (*c_cmd) {
            return construct.run();
        }
        if (*spec_cmd) {
            auto g = load_graph(graph_file).graph;
            Json j = graph_summary(g);
            j["eigenvalues"] = spectrum(g);
            print(j);
            return 0;
        }
        if (*ndl_cmd) {
            auto g = load_graph(graph_file).graph;
            print(report_json(ndl_report(g, parse_s_values(s_values)), g));
            return 0;
        }
        if (*girth_cmd) {
            auto g = load_graph(graph_file).graph;
            Json j = graph_summary(g);
            auto gi = girth(g);
            j["girth"] = gi ? Json(*gi) : Json("infinite (acyclic)");
            print(j);
            return 0;
        }
        if (*alpha_cmd) {
            auto g = load_graph(graph_file).graph;
            IndependenceOptions o;
            o.mode = lower ? IndependenceMode::lower_bound : IndependenceMode::exact;
            o.budget = budget;
            o.seed = seed;
            o.restarts = restarts;
            auto r = independence_number(g, o);
            Json j = graph_summary(g);
            j["mode"] = lower ? "lower_bound" : "exact";
            if (lower)
                j["seed"] = seed;
            j["alpha"] = r.alpha;
            j["exact"] = r.exact;
            j["upper_bound"] = r.upper_bound;
            j["nodes"] = r.nodes;
            j["witness"] = r.witness;
            print(j);
            return (lower || r.exact) ? 0 : exit_failure;
        }
        if (*free_cmd) {
            auto g = load_graph(graph_file).graph;
            auto pattern = load_pattern(forbid);
            auto r = check_free(g, pattern);
            Json j = graph_summary(g);
            j["forbidden"] = pattern.descriptor();
            j["method"] = r.method;
            j["free"] = r.free;
            if (! r.free)
                j["occurrence"] = r.witness;
            print(j);
            return 0;
        }
        if (*lf_cmd) {
            auto f = load_base(base);
            auto fam = lf_family(f);
            Json j{ { "base_vertices", f.size() }, { "base_edges", f.edge_count() },
                { "partitions_enumerated", fam.partitions_enumerated }, { "members", Json::array() } };
            for (auto & m : fam.members) {
                Json parts = Json::array();
                for (auto & part : m.partition) {
                    Json pj = Json::array();
                    for (auto [a, b] : part)
                        pj.push_back({ a, b });
                    parts.push_back(pj);
                }
                Json edges = Json::array();
                for (auto [a, b] : m.graph.edges())
                    edges.push_back({ a, b });
                auto cyc = cycle_with_pendants(m.graph);
                j["members"].push_back({ { "vertices", m.graph.size() }, { "edges", edges }, { "partition", parts },
                    { "canonical", m.canonical },
                    { "cycle_with_pendants", cyc ? Json(*cyc) : Json(nullptr) } });
            }
            print(j);
            return 0;
        }
        if (*block_cmd) {
            auto file = load_graph(host_file);
            if (! file.left_size)
                throw InvalidArgument("host file has no 'c bipartite' line");
            auto host = as_bipartite(file.graph, *file.left_size);
            auto r = block_construct(host, seed);
            save_graph(out, r.graph);
            Json j = graph_summary(r.graph);
            j["host"] = host.provenance();
            j["seed"] = seed;
            print(j);
            return 0;
        }
        if (*sample_cmd) {
            auto g = load_graph(graph_file).graph;
            std::optional<double> p_override, lambda_override;
            if (p >= 0)
                p_override = p;
            if (lambda > 0)
                lambda_override = lambda;
            auto c = sample_ramsey_graph(g, load_pattern(forbid), t, p_override, seed, lambda_override, options);
            save_certificate(out, c);
            print(certificate_summary(c, out));
            return 0;
        }
        if (*certify_cmd) {
            auto g = load_graph(graph_file).graph;
            std::optional<std::uint64_t> chosen_t;
            if (t > 0)
                chosen_t = t;
            auto r = certify(g, load_pattern(forbid), chosen_t, options);
            if (! r.certificate) {
                print(Json{ { "refused", r.refusal }, { "witness", r.witness } });
                return exit_failure;
            }
            save_certificate(out, *r.certificate);
            print(certificate_summary(*r.certificate, out));
            return 0;
        }
        if (*verify_cmd) {
            auto c = load_certificate(cert_file);
            auto report = verify_certificate(c, options);
            Json checks = Json::object();
            for (auto & [name, ok] : report.checks)
                checks[name] = ok;
            Json j{ { "claim", c.claim }, { "verified", report.ok }, { "checks", checks } };
            if (! report.error.empty())
                j["error"] = report.error;
            print(j);
            return report.ok ? 0 : exit_failure;
        }
        if (*ar_cmd) {
            auto r = alon_rodl_bound(n, d, lambda, t);
            print(Json{ { "inputs", { { "n", n }, { "d", d }, { "lambda", lambda }, { "t", t } } },
                { "log_base", r.log_base },
                { "final_bound", r.final_bound }, { "log_final_bound", r.log_final_bound },
                { "final_formula", "(2 e^2 lambda / ln^2 n)^t" },
                { "intermediate_bound", r.intermediate_bound }, { "log_intermediate_bound", r.log_intermediate_bound },
                { "intermediate_formula", "(1/t!) C(t,l) n^l (2 lambda n / d)^(t-l)" },
                { "l", r.ell }, { "l_rule", "ceil(t / ln n), capped at t" }, { "l_capped", r.ell_capped },
                { "t_threshold", r.t_threshold }, { "threshold_t", r.threshold_t },
                { "flags", { { "d_at_least_one", r.d_at_least_one }, { "lambda_above_half", r.lambda_above_half },
                               { "t_at_least_2n_ln2n_over_d", r.t_above_threshold } } } });
            return 0;
        }
        if (*feas_cmd) {
            auto fmode = mode == "hexagon" ? FeasibilityMode::hexagon : FeasibilityMode::theorem5;
            std::string c_value = fmode == FeasibilityMode::hexagon ? fq : fd;
            if (c_value.empty())
                throw InvalidArgument(fmode == FeasibilityMode::hexagon ? "hexagon mode needs --q" : "theorem5 mode needs --d");
            if (fmode == FeasibilityMode::hexagon && (fm.empty() || fn.empty())) {
                auto h = hexagon_parameters(std::stoull(fq));
                if (fm.empty())
                    fm = h.m;
                if (fn.empty())
                    fn = h.n;
            }
            if (! t_scale.empty()) {
                if (fq.empty())
                    throw InvalidArgument("--t-scale needs --q");
                auto slash = t_scale.find('/');
                if (slash == std::string::npos)
                    throw InvalidArgument("--t-scale must be a/b");
                ft = scaled_q8(std::stoull(fq), std::stoull(t_scale.substr(0, slash)), std::stoull(t_scale.substr(slash + 1)));
            }
            if (ft.empty() || fm.empty() || fn.empty())
                throw InvalidArgument("feasibility needs --m, --n and --t (or --t-scale)");
            auto r = block_feasibility(fm, fn, c_value, ft, fmode);
            print(Json{ { "mode", mode },
                { "inputs", { { "m", r.m }, { "n", r.n }, { fmode == FeasibilityMode::hexagon ? "q" : "d", r.d_or_q }, { "t", r.t } } },
                { "formula", fmode == FeasibilityMode::hexagon ? "t log2 n + m - (q+1) t" : "t log2 n + m - d t" },
                { "log_base", r.log_base }, { "exponent", r.exponent }, { "sign", r.sign },
                { "exponent_floor", r.exponent_floor }, { "exponent_ceiling", r.exponent_ceiling },
                { "decided_by", r.decided_by }, { "feasible", r.feasible },
                { "claim", r.feasible ? Json(r.claim) : Json(nullptr) } });
            return 0;
        }
    }
    catch (const std::exception & e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_failure;
    }
    return exit_usage;
}
