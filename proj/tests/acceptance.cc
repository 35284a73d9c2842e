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
#include <ramsey/random.hh>
#include <ramsey/recipe.hh>
#include <ramsey/spectra.hh>

#include "fixtures.hh"
#include "oracles.hh"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

using namespace ramsey;

namespace
{
    struct Outcome
    {
        bool pass = true;
        std::ostringstream detail;

        auto require(bool ok, const std::string & what) -> void
        {
            if (! ok) {
                if (pass)
                    detail << "failed: ";
                else
                    detail << "; ";
                detail << what;
                pass = false;
            }
        }

        auto note(const std::string & text) -> void
        {
            notes.push_back(text);
        }

        std::vector<std::string> notes;
    };

    struct Criterion
    {
        unsigned number;
        std::string name;
        double limit_seconds;
        std::function<void(Outcome &)> body;
    };

    std::string cli_path;

    auto close(double a, double b, double tol) -> bool
    {
        return std::abs(a - b) <= tol;
    }

    auto fmt(double v, int digits = 9) -> std::string
    {
        std::ostringstream s;
        s << std::setprecision(digits) << v;
        return s.str();
    }

    /// Paley graph spectrum.
    auto paley_spectrum(Outcome & out) -> void
    {
        auto g = paley(13);
        auto ev = spectrum(g);
        out.require(ev.size() == 13, "13 eigenvalues");
        double hi = (-1 + std::sqrt(13.0)) / 2, lo = (-1 - std::sqrt(13.0)) / 2;
        out.require(close(ev[0], 6, 1e-9), "top eigenvalue 6");
        for (unsigned i = 1; i <= 6; ++i)
            out.require(close(ev[i], hi, 1e-9), "eigenvalue " + std::to_string(i) + " = (-1+sqrt13)/2");
        for (unsigned i = 7; i < 13; ++i)
            out.require(close(ev[i], lo, 1e-9), "eigenvalue " + std::to_string(i) + " = (-1-sqrt13)/2");
        auto r = ndl_report(g);
        out.require(close(r.lambda, (1 + std::sqrt(13.0)) / 2, 1e-9), "lambda = (1+sqrt13)/2");
        out.detail << "lambda = " << fmt(r.lambda, 12);
    }

    /// Erdos-Renyi polarity graphs.
    auto polarity_parameters(Outcome & out) -> void
    {
        std::ostringstream signed_note, abs_note;
        for (std::uint64_t q : { 2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u }) {
            auto g = er_polarity(q);
            auto tag = "q=" + std::to_string(q) + ": ";
            out.require(g.size() == q * q + q + 1, tag + "n");
            out.require(g.edge_count() == q * (q + 1) * (q + 1) / 2, tag + "edge count");
            auto profile = g.degree_profile();
            out.require(profile[q] == q + 1 && profile[q + 1] == q * q, tag + "degree profile");
            out.require(! find_cycle(g, 4), tag + "C4 present");

            auto ev = spectrum(g);
            double sq = std::sqrt(double(q)), max_signed = ev[1], max_abs = 0;
            for (unsigned i = 1; i < ev.size(); ++i)
                max_abs = std::max(max_abs, std::abs(ev[i]));
            out.require(max_abs <= sq + 1 + 1e-9, tag + "|lambda_i| <= sqrt q + 1");
            out.require(close(max_signed, sq, 1e-6), tag + "largest non-principal eigenvalue " + fmt(max_signed, 8)
                    + " is not sqrt q = " + fmt(sq, 8));
            signed_note << " " << q << ":" << fmt(max_signed - sq, 3);
            abs_note << " " << q << ":" << fmt(max_abs - sq, 3);
        }
        out.note("largest non-principal eigenvalue minus sqrt q, per q:" + signed_note.str());
        out.note("largest non-principal |eigenvalue| minus sqrt q, per q:" + abs_note.str());
        if (out.pass)
            out.detail << "all nine q";
    }

    /// Incidence geometries.
    auto incidence_geometries(Outcome & out) -> void
    {
        auto pg = pg_incidence(2).to_graph();
        out.require(pg.size() == 14 && pg.is_regular() && pg.degree(0) == 3, "pg_incidence(2) is 14-vertex 3-regular");
        out.require(girth(pg) == 6u && oracle::edge_deletion_girth(pg) == 6u, "pg_incidence(2) girth 6");
        for (std::uint64_t q : { 2u, 3u, 4u }) {
            auto tag = "gq_incidence(" + std::to_string(q) + ")";
            auto b = gq_incidence(q);
            auto bi = b.biregularity();
            out.require(bi && bi->first == q + 1 && bi->second == q + 1, tag + " (q+1)-biregular");
            auto g = b.to_graph();
            out.require(girth(g) == 8u && oracle::edge_deletion_girth(g) == 8u, tag + " girth 8");
            auto sv = singular_values(b);
            out.require(close(sv[0], double(q + 1), 1e-6), tag + " top singular value q+1");
            unsigned nontrivial = 0;
            for (unsigned i = 1; i < sv.size(); ++i) {
                if (sv[i] < 1e-6)
                    continue;
                ++nontrivial;
                out.require(close(sv[i], std::sqrt(2.0 * q), 1e-6), tag + " singular value " + fmt(sv[i]) + " != sqrt(2q)");
            }
            out.require(nontrivial > 0, tag + " has nontrivial singular values");
            out.note(tag + ": " + std::to_string(nontrivial) + " singular values sqrt(2q), "
                    + std::to_string(sv.size() - 1 - nontrivial) + " zero");
        }
        if (out.pass)
            out.detail << "girths 6, 8, 8, 8; singular values sqrt(2q)";
    }

    /// Connected, unicyclic, and the leaves hang directly off the cycle.
    auto oracle_cycle_with_pendants(const Graph & g) -> std::optional<unsigned>
    {
        if (g.edge_count() != g.size())
            return std::nullopt;
        std::vector<bool> seen(g.size(), false);
        std::vector<Vertex> stack{ 0 };
        seen[0] = true;
        unsigned reached = 1;
        while (! stack.empty()) {
            auto v = stack.back();
            stack.pop_back();
            for (auto w : g.neighbours(v))
                if (! seen[w]) {
                    seen[w] = true;
                    ++reached;
                    stack.push_back(w);
                }
        }
        if (reached != g.size())
            return std::nullopt;
        unsigned core = 0;
        for (Vertex v = 0; v < g.size(); ++v) {
            if (g.degree(v) == 1)
                continue;
            unsigned core_degree = 0;
            for (auto w : g.neighbours(v))
                core_degree += g.degree(w) != 1;
            if (core_degree != 2)
                return std::nullopt;
            ++core;
        }
        return core;
    }

    /// L(F) for K3 and C5.
    auto lf_reproduction(Outcome & out) -> void
    {
        auto k3 = lf_family(complete_graph(3));
        out.require(k3.members.size() == 2, "L(K3) has " + std::to_string(k3.members.size()) + " members, not 2");
        bool c6 = false, c4p = false;
        for (auto & m : k3.members) {
            c6 = c6 || oracle::isomorphic(m.graph, cycle_graph(6));
            c4p = c4p || oracle::isomorphic(m.graph, fixture::c4_with_pendant());
        }
        out.require(c6 && c4p, "L(K3) is {C6, C4 + pendant edge}");

        auto c5 = lf_family(cycle_graph(5));
        out.require(c5.partitions_enumerated == oracle::count_path_partitions(cycle_graph(5)), "every path partition of C5 enumerated");
        std::map<unsigned, unsigned> lengths;
        for (auto & m : c5.members) {
            auto mine = cycle_with_pendants(m.graph);
            auto theirs = oracle_cycle_with_pendants(m.graph);
            out.require(mine && theirs && *mine == *theirs, "member is a single cycle plus pendant vertices");
            if (theirs) {
                out.require(*theirs <= 10, "cycle length " + std::to_string(*theirs) + " > 10");
                ++lengths[*theirs];
            }
        }
        std::ostringstream s;
        for (auto [l, c] : lengths)
            s << " C" << l << "x" << c;
        out.note("L(C5): " + std::to_string(c5.members.size()) + " members from " + std::to_string(c5.partitions_enumerated)
                + " path partitions; cycle lengths" + s.str());
        if (out.pass)
            out.detail << "L(K3) = {C6, C4+pendant}; L(C5) " << c5.members.size() << " members, cycles <= 10";
    }

    /// Block construction avoids the pattern.
    auto block_correctness(Outcome & out) -> void
    {
        auto gq2 = gq_incidence(2), gq3 = gq_incidence(3), d72 = dkq(7, 2);
        out.require(girth(d72.to_graph()).value_or(0) >= 12, "dkq(7,2) girth >= 12");
        for (std::uint64_t seed = 0; seed < 20; ++seed) {
            auto tag = " (seed " + std::to_string(seed) + ")";
            for (auto * host : { &gq2, &gq3 }) {
                auto h = block_construct(*host, seed).graph;
                out.require(! find_clique(h, 3) && oracle::triangles(h) == 0, host->provenance() + " block output has a triangle" + tag);
            }
            auto h = block_construct(d72, seed).graph;
            out.require(! find_cycle(h, 5), "dkq(7,2) block output has a C5" + tag);
        }
        if (out.pass)
            out.detail << "60 outputs, no K3 / no C5";
    }

    /// Exact probability law, by enumeration and by simulation.
    auto probability_law(Outcome & out) -> void
    {
        unsigned hosts = 0, subsets = 0;
        for (std::uint64_t seed = 0; hosts < 12; ++seed) {
            Xoshiro256 rng(seed);
            unsigned m = 2 + unsigned(rng.below(5)), n = 3 + unsigned(rng.below(6));
            std::vector<Edge> edges;
            for (Vertex u = 0; u < m; ++u)
                for (Vertex v = 0; v < n; ++v)
                    if (rng.uniform() < 0.45)
                        edges.emplace_back(u, v);
            if (edges.size() > 20)
                continue;
            ++hosts;
            BipartiteGraph host(m, n, edges, "tiny");
            auto counts = oracle::block_independence_counts(host);
            std::uint64_t total = std::uint64_t(1) << edges.size();
            for (std::uint64_t s = 0; s < counts.size(); ++s) {
                std::vector<Vertex> subset;
                for (Vertex v = 0; v < n; ++v)
                    if (s >> v & 1)
                        subset.push_back(v);
                auto p = indep_probability(host, subset);
                ++subsets;
                if ((counts[s] << -p.log2_exact) != total) {
                    out.require(false, "enumeration disagrees on host seed " + std::to_string(seed) + " subset " + std::to_string(s));
                    return;
                }
            }
        }

        auto host = gq_incidence(2);
        Xoshiro256 pick(2024);
        std::vector<Vertex> all(host.right_size());
        std::iota(all.begin(), all.end(), 0);
        std::vector<Vertex> subset;
        for (unsigned i = 0; i < 4; ++i) {
            auto j = i + unsigned(pick.below(all.size() - i));
            std::swap(all[i], all[j]);
            subset.push_back(all[i]);
        }
        std::sort(subset.begin(), subset.end());
        double p = indep_probability(host, subset).value();
        const unsigned runs = 100000;
        unsigned hits = 0;
        for (std::uint64_t seed = 0; seed < runs; ++seed)
            hits += is_independent(block_construct(host, seed).graph, subset);
        double sigma = std::sqrt(runs * p * (1 - p)), deviation = std::abs(hits - runs * p);
        out.require(deviation <= 3 * sigma, "frequency " + std::to_string(hits) + "/" + std::to_string(runs)
                + " is " + fmt(deviation / sigma, 3) + " sigma from p = " + fmt(p));
        out.detail << hosts << " hosts, " << subsets << " subsets exact; subset {";
        for (unsigned i = 0; i < subset.size(); ++i)
            out.detail << (i ? "," : "") << subset[i];
        out.detail << "} p = " << fmt(p, 6) << ", observed " << hits << "/" << runs << " (" << fmt(deviation / sigma, 3) << " sigma)";
    }

    /// tr(A^3) against d^3 - lambda^3 (n-1).
    auto trace_inequality(Outcome & out) -> void
    {
        std::vector<Graph> triangle_free{ pg_incidence(2).to_graph(), pg_incidence(3).to_graph(), gq_incidence(2).to_graph(),
            gq_incidence(3).to_graph(), dkq(2, 3).to_graph(), dkq(3, 3).to_graph(), dkq(7, 2).to_graph(), cycle_graph(5),
            petersen_graph(), fixture::heawood() };
        for (auto & g : triangle_free) {
            auto r = ndl_report(g);
            auto tc = trace_cube_check(g, r);
            out.require(r.trace_cube == 0 && oracle::triangles(g) == 0, g.provenance() + " tr(A^3) = 0");
            out.require(tc.applicable, g.provenance() + " regular");
            out.require(tc.d_cubed - std::pow(r.lambda, 3) * (g.size() - 1) <= 1e-6 * tc.d_cubed,
                    g.provenance() + " d^3 - lambda^3 (n-1) <= 0");
        }
        for (std::uint64_t q : { 5u, 9u, 13u, 17u, 25u, 29u }) {
            auto g = paley(q);
            auto r = ndl_report(g);
            auto tc = trace_cube_check(g, r);
            out.require(r.trace_cube == 6 * oracle::triangles(g), g.provenance() + " tr(A^3) = 6 triangles");
            out.require(tc.applicable && tc.pass && double(tc.trace) >= tc.lower_bound - 1e-6 * tc.d_cubed,
                    g.provenance() + " tr(A^3) >= d^3 - lambda^3 (n-1)");
        }
        if (out.pass)
            out.detail << triangle_free.size() << " triangle-free graphs, 6 Paley graphs";
    }

    /// Alon-Rodl arithmetic.
    auto alon_rodl(Outcome & out) -> void
    {
        Xoshiro256 rng(100);
        double worst = 0;
        for (int i = 0; i < 100; ++i) {
            std::uint64_t n = 2 + rng.below(1000000);
            std::uint64_t d = 1 + rng.below(n);
            double lambda = 0.5001 + rng.uniform() * 100;
            std::uint64_t t = 1 + rng.below(10000);
            auto r = alon_rodl_bound(n, d, lambda, t);
            long double f = oracle::log_final_bound(double(n), lambda, t);
            long double m = oracle::log_intermediate_bound(double(n), double(d), lambda, t, r.ell);
            double ef = double(std::abs(r.log_final_bound - f) / std::max<long double>(1, std::abs(f)));
            double em = double(std::abs(r.log_intermediate_bound - m) / std::max<long double>(1, std::abs(m)));
            worst = std::max({ worst, ef, em });
            double ln_n = std::log(double(n));
            out.require(r.ell == std::min<std::uint64_t>(t, std::uint64_t(std::ceil(t / ln_n))), "l rule");
        }
        out.require(worst <= 1e-12, "log-space recomputation differs by " + fmt(worst, 3));

        // Thresholds 2 n ln^2 n / d worked by hand: 13,6 -> 28.5088; 91,10 -> 370.3309;
        // 1000,500 -> 190.8683; 100,20 -> 212.0759; 2,1 -> 1.9218.
        struct Case { std::uint64_t n, d; double lambda; std::uint64_t t; bool above; };
        std::vector<Case> cases{ { 13, 6, 2.302776, 3, false }, { 13, 6, 2.302776, 29, true }, { 13, 6, 2.302776, 28, false },
            { 91, 10, 3, 30, false }, { 91, 10, 3, 371, true }, { 1000, 500, 5, 191, true }, { 1000, 500, 5, 190, false },
            { 100, 20, 0.6, 213, true }, { 100, 20, 0.6, 212, false }, { 2, 1, 1, 1, false } };
        for (auto & c : cases) {
            auto r = alon_rodl_bound(c.n, c.d, c.lambda, c.t);
            out.require(r.d_at_least_one && r.lambda_above_half && r.t_above_threshold == c.above,
                    "flags for (" + std::to_string(c.n) + "," + std::to_string(c.d) + "," + fmt(c.lambda) + "," + std::to_string(c.t) + ")");
        }
        for (auto bad : { std::tuple<std::uint64_t, std::uint64_t, double>{ 13, 0, 2.0 }, { 13, 6, 0.5 }, { 1, 1, 2.0 } }) {
            bool threw = false;
            try {
                alon_rodl_bound(std::get<0>(bad), std::get<1>(bad), std::get<2>(bad), 3);
            }
            catch (const InvalidArgument &) {
                threw = true;
            }
            out.require(threw, "domain violation rejected");
        }

        unsigned hypotheses = 0, final_le_intermediate = 0, intermediate_le_final = 0;
        Xoshiro256 sweep(800);
        while (hypotheses < 100) {
            std::uint64_t n = 10 + sweep.below(5000);
            std::uint64_t d = 1 + sweep.below(n);
            double lambda = 0.5001 + sweep.uniform() * std::sqrt(double(d));
            double ln_n = std::log(double(n));
            std::uint64_t t = std::uint64_t(std::ceil(2 * n * ln_n * ln_n / d)) + sweep.below(n);
            auto r = alon_rodl_bound(n, d, lambda, t);
            if (! r.all_hypotheses())
                continue;
            ++hypotheses;
            final_le_intermediate += r.log_final_bound <= r.log_intermediate_bound;
            intermediate_le_final += r.log_intermediate_bound <= r.log_final_bound;
        }
        out.require(final_le_intermediate == hypotheses, "final <= intermediate held on " + std::to_string(final_le_intermediate)
                + " of " + std::to_string(hypotheses) + " swept points with all flags set");
        out.note("intermediate <= final (the direction the counting argument proves) held on "
                + std::to_string(intermediate_le_final) + " of " + std::to_string(hypotheses) + " points");
        if (out.pass)
            out.detail << "100-point sweep within " << fmt(worst, 3) << ", 10 flag cases";
        else
            out.detail << " (worst relative log error " << fmt(worst, 3) << ")";
    }

    auto tampering_fails(const RamseyCertificate & c, Outcome & out) -> void
    {
        auto fails = [](const RamseyCertificate & x) { return ! verify_certificate(x).ok; };
        auto resealed = [](RamseyCertificate y) { y.digest = certificate_digest(y); return y; };
        std::vector<std::pair<std::string, std::function<void(RamseyCertificate &)>>> edits{
            { "claim", [](auto & x) { x.claim += "0"; } },
            { "forbidden", [](auto & x) { x.forbidden = x.forbidden == "K5" ? "K6" : "K5"; } },
            { "provenance", [](auto & x) { x.provenance += " | complement()"; } },
            { "family", [](auto & x) { x.family = "path"; } },
            { "parameters", [](auto & x) { x.parameters["q"] += 1; } },
            { "transformations", [](auto & x) { x.transformations.push_back("complement()"); } },
            { "seeds", [](auto & x) { x.seeds.push_back(1); } },
            { "n", [](auto & x) { x.n += 1; } },
            { "t", [](auto & x) { x.t += 1; } },
            { "alpha", [](auto & x) { x.alpha -= 1; } },
            { "alpha_mode", [](auto & x) { x.alpha_mode = "lower_bound"; } },
            { "alpha_witness", [](auto & x) { x.alpha_witness.pop_back(); } },
            { "freeness_method", [](auto & x) { x.freeness_method = "none"; } },
            { "edge_hash", [](auto & x) { x.edge_hash = hash_to_hex(hash_from_hex(x.edge_hash) ^ 1); } },
            { "tool_version", [](auto & x) { x.tool_version = "other"; } },
            { "digest", [](auto & x) { x.digest = "0000000000000000"; } },
        };
        for (auto & [field, edit] : edits) {
            auto x = c;
            edit(x);
            out.require(fails(x), c.provenance + ": edited " + field + " still verifies");
        }
        for (auto & [field, edit] : edits) {
            if (field == "digest")
                continue;
            auto x = c;
            edit(x);
            out.require(fails(resealed(x)), c.provenance + ": edited and resealed " + field + " still verifies");
        }
    }

    /// End-to-end certificates.
    auto end_to_end(Outcome & out) -> void
    {
        using clock = std::chrono::steady_clock;
        auto t0 = clock::now();
        auto er = er_polarity(11);
        auto r = certify(er, ForbiddenPattern::cycle(4));
        out.require(r.certificate.has_value(), "er_polarity(11) refused: " + r.refusal);
        if (! r.certificate)
            return;
        auto & c = *r.certificate;
        auto t1 = clock::now();
        out.require(c.n == 133 && c.t == c.alpha + 1 && c.claim == "r(C4," + std::to_string(c.alpha + 1) + ") > 133", "claim " + c.claim);
        out.require(verify_certificate(c).ok, "er_polarity(11) certificate does not verify");
        auto t2 = clock::now();
        auto doll = oracle::russian_doll_alpha(er);
        auto t3 = clock::now();
        out.require(doll == c.alpha, "second exact method gives " + std::to_string(doll));
        out.require(c.alpha_witness.size() == c.alpha && is_independent(er, c.alpha_witness), "witness independent");

        auto p = certify(paley(13), ForbiddenPattern::clique(4));
        out.require(p.certificate && p.certificate->claim == "r(4,4) > 13", "paley(13) claim r(4,4) > 13");
        out.require(p.certificate && verify_certificate(*p.certificate).ok, "paley(13) certificate verifies");
        out.require(p.certificate && p.certificate->n < 18, "consistent with r(4,4) = 18");

        if (p.certificate)
            tampering_fails(*p.certificate, out);
        tampering_fails(c, out);
        {
            auto x = c;
            x.alpha -= 1;
            x.t -= 1;
            x.claim = claim_text(ForbiddenPattern::cycle(4), x.t, x.n);
            x.alpha_witness.pop_back();
            x.digest = certificate_digest(x);
            out.require(! verify_certificate(x).ok, "understated alpha resealed still verifies");
        }
        auto t4 = clock::now();

        auto secs = [](auto a, auto b) { return fmt(std::chrono::duration<double>(b - a).count(), 3) + " s"; };
        out.detail << c.claim << " (alpha " << c.alpha << " by branch and bound and by Russian doll); r(4,4) > 13; tampering rejected";
        out.note("certify " + secs(t0, t1) + ", verify " + secs(t1, t2) + ", second exact method " + secs(t2, t3)
                + ", paley and tampering " + secs(t3, t4));
    }

    /// Sampling on er_polarity(9).
    auto sampling(Outcome & out) -> void
    {
        auto g = er_polarity(9);
        const std::uint64_t t = 8;
        const double lambda = 3.0;
        double ln_n = std::log(double(g.size()));
        double expected_p = std::min(1.0, ln_n * ln_n / (2 * std::numbers::e * std::numbers::e * lambda));
        std::ostringstream sizes;
        for (std::uint64_t seed = 1; seed <= 10; ++seed) {
            auto c = sample_ramsey_graph(g, ForbiddenPattern::cycle(4), t, std::nullopt, seed, lambda);
            auto tag = " (seed " + std::to_string(seed) + ")";
            out.require(c.sampling && close(c.sampling->p, expected_p, 1e-12), "recorded p" + tag);
            auto h = rebuild_graph(c.provenance);
            auto alpha = oracle::russian_doll_alpha(h);
            out.require(alpha <= t - 1 && independence_number(h).alpha == alpha && c.alpha == alpha, "alpha(G[T]) <= t-1" + tag);
            out.require(verify_certificate(c).ok, "certificate verifies" + tag);
            sizes << (seed > 1 ? "," : "") << c.sampling->sampled.size() << "->" << c.n;
        }
        auto spectral = ndl_report(g).lambda;
        out.note("lambda supplied as sqrt q = 3; the spectral value is " + fmt(spectral, 8) + " (p would be "
                + fmt(sampling_probability(g.size(), spectral), 6) + ")");
        out.detail << "t = " << t << ", p = " << fmt(expected_p, 12) << ", |U|->|T| per seed: " << sizes.str();
    }

    /// Hexagon-mode exponent signs at q = 32.
    auto feasibility(Outcome & out) -> void
    {
        const std::uint64_t q = 32;
        auto h = hexagon_parameters(q);
        auto hi = block_feasibility(h.m, h.n, std::to_string(q), scaled_q8(q, 105, 100), FeasibilityMode::hexagon);
        auto lo = block_feasibility(h.m, h.n, std::to_string(q), scaled_q8(q, 1, 2), FeasibilityMode::hexagon);
        out.require(hi.sign < 0, "t = ceil(1.05 q^8): exponent " + fmt(hi.exponent, 6) + " in [" + hi.exponent_floor + ", "
                + hi.exponent_ceiling + "] is not negative");
        out.require(lo.sign > 0, "t = ceil(0.5 q^8): exponent " + fmt(lo.exponent, 6) + " is not positive");
        out.require(hi.decided_by == "integer-bracket" && lo.decided_by == "integer-bracket", "decided by integer arithmetic");
        if (out.pass)
            out.detail << "signs -, +";
        for (std::uint64_t big : { 2048u, 4096u }) {
            auto hb = hexagon_parameters(big);
            auto a = block_feasibility(hb.m, hb.n, std::to_string(big), scaled_q8(big, 105, 100), FeasibilityMode::hexagon);
            auto b = block_feasibility(hb.m, hb.n, std::to_string(big), scaled_q8(big, 1, 2), FeasibilityMode::hexagon);
            out.note("q = " + std::to_string(big) + ": exponent sign " + std::to_string(a.sign) + " at 1.05 q^8, "
                    + std::to_string(b.sign) + " at 0.5 q^8");
        }
    }

    /// Exact alpha against exhaustive enumeration.
    auto alpha_oracle(Outcome & out) -> void
    {
        std::vector<Graph> graphs{ cycle_graph(5), petersen_graph(), paley(13) };
        for (std::uint64_t seed = 0; seed < 50; ++seed) {
            unsigned n = 5 + unsigned(seed % 20);
            graphs.push_back(fixture::random_graph(n, 0.1 + 0.8 * double(seed % 9) / 8, 1000 + seed));
        }
        for (auto & g : graphs) {
            auto r = independence_number(g);
            out.require(r.exact && r.alpha == oracle::exhaustive_alpha(g) && is_independent(g, r.witness)
                    && r.witness.size() == r.alpha, g.provenance());
        }
        out.require(independence_number(cycle_graph(5)).alpha == 2 && independence_number(petersen_graph()).alpha == 4
                && independence_number(paley(13)).alpha == 3, "known values 2, 4, 3");
        if (out.pass)
            out.detail << graphs.size() << " graphs agree";
    }

    auto read_bytes(const std::filesystem::path & p) -> std::string
    {
        std::ifstream in(p, std::ios::binary);
        return { std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>() };
    }

    auto run_pipeline(const std::filesystem::path & dir, Outcome & out) -> void
    {
        std::filesystem::remove_all(dir);
        std::filesystem::create_directories(dir);
        std::vector<std::string> commands{
            "construct paley --q 13 --out paley13.dimacs",
            "construct er_polarity --q 9 --out er9.dimacs",
            "construct gq_incidence --q 2 --out gq2.dimacs",
            "construct dkq --k 3 --q 3 --out d33.dimacs",
            "block --host gq2.dimacs --seed 7 --out block_gq2.dimacs",
            "block --host d33.dimacs --seed 11 --out block_d33.dimacs",
            "certify paley13.dimacs --forbid K4 --out paley13.json",
            "certify block_gq2.dimacs --forbid K3 --out block_gq2.json",
            "sample er9.dimacs --forbid C4 --t 8 --seed 3 --lambda 3 --out sample_er9.json",
            "sample er9.dimacs --forbid C4 --t 6 --seed 4 --out sample_er9_spectral.json",
        };
        for (auto & c : commands) {
            auto line = "cd \"" + dir.string() + "\" && \"" + cli_path + "\" " + c + " > /dev/null";
            int status = std::system(line.c_str());
            out.require(status == 0, "'" + c + "' exited with " + std::to_string(status));
        }
    }

    /// Byte-identical reruns.
    auto determinism(Outcome & out) -> void
    {
        if (cli_path.empty()) {
            out.require(false, "no command-line tool path given");
            return;
        }
        auto base = std::filesystem::current_path() / "acceptance-work";
        run_pipeline(base / "run1", out);
        run_pipeline(base / "run2", out);
        unsigned files = 0;
        for (auto & entry : std::filesystem::directory_iterator(base / "run1")) {
            auto other = base / "run2" / entry.path().filename();
            auto a = read_bytes(entry.path()), b = read_bytes(other);
            out.require(fnv1a64(a) == fnv1a64(b) && a == b, entry.path().filename().string() + " differs between runs");
            ++files;
        }
        out.require(files == 10, std::to_string(files) + " output files");

        auto x = certificate_to_json(sample_ramsey_graph(er_polarity(7), ForbiddenPattern::cycle(4), 6, std::nullopt, 9));
        auto y = certificate_to_json(sample_ramsey_graph(er_polarity(7), ForbiddenPattern::cycle(4), 6, std::nullopt, 9));
        out.require(x == y, "in-process certificate differs between runs");
        auto b1 = block_construct(dkq(7, 2), 42), b2 = block_construct(dkq(7, 2), 42);
        out.require(edge_list_hash(b1.graph) == edge_list_hash(b2.graph) && b1.partition.parts == b2.partition.parts,
                "block partition differs between runs");
        if (out.pass)
            out.detail << files << " files from two CLI runs byte-identical, in-process reruns identical";
    }
}

auto main(int argc, char * argv[]) -> int
{
    if (argc > 1)
        cli_path = std::filesystem::absolute(argv[1]).string();

    std::vector<Criterion> criteria{
        { 1, "paley spectrum", 1, paley_spectrum },
        { 2, "polarity graph parameters", 30, polarity_parameters },
        { 3, "incidence geometries", 30, incidence_geometries },
        { 4, "L(F) reproduction", 5, lf_reproduction },
        { 5, "block construction correctness", 120, block_correctness },
        { 6, "probability law", 120, probability_law },
        { 7, "trace inequality", 30, trace_inequality },
        { 8, "counting bound arithmetic", 0, alon_rodl },
        { 9, "end-to-end certificate", 300, end_to_end },
        { 10, "sampling procedure", 120, sampling },
        { 11, "hexagon feasibility arithmetic", 1, feasibility },
        { 12, "exact alpha oracle suite", 60, alpha_oracle },
        { 13, "determinism", 0, determinism },
    };

    unsigned failed = 0;
    for (auto & c : criteria) {
        Outcome out;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(out);
        }
        catch (const std::exception & e) {
            out.require(false, std::string("exception: ") + e.what());
        }
        double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit_seconds > 0)
            out.require(seconds < c.limit_seconds, "took " + fmt(seconds, 3) + " s, limit " + fmt(c.limit_seconds) + " s");
        failed += ! out.pass;
        std::cout << (out.pass ? "PASS" : "FAIL") << " " << std::setw(2) << c.number << " " << c.name << " ["
                  << std::fixed << std::setprecision(3) << seconds << " s";
        std::cout.unsetf(std::ios::floatfield);
        if (c.limit_seconds > 0)
            std::cout << " / " << c.limit_seconds << " s";
        std::cout << "] " << out.detail.str() << '\n';
        for (auto & n : out.notes)
            std::cout << "       note: " << n << '\n';
        std::cout.flush();
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed ? 1 : 0;
}
