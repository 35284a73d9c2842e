/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/atlas.hh>
#include <ramsey/certificate.hh>
#include <ramsey/errors.hh>
#include <ramsey/hash.hh>
#include <ramsey/io.hh>

#include "fixtures.hh"

#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

using namespace ramsey;

namespace
{
    auto reference_hash(const Graph & g) -> std::uint64_t
    {
        std::vector<std::pair<unsigned, unsigned>> edges;
        for (unsigned u = 0; u < g.size(); ++u)
            for (unsigned v = u + 1; v < g.size(); ++v)
                if (g.adjacent(u, v))
                    edges.emplace_back(u + 1, v + 1);
        std::sort(edges.begin(), edges.end());
        std::uint64_t h = 14695981039346656037ull;
        for (auto [u, v] : edges)
            for (char ch : std::to_string(u) + " " + std::to_string(v) + "\n") {
                h ^= std::uint8_t(ch);
                h *= 1099511628211ull;
            }
        return h;
    }

    auto round_trip(const Graph & g, std::optional<unsigned> left = std::nullopt) -> GraphFile
    {
        std::stringstream s;
        write_graph(s, g, left);
        return read_graph(s);
    }

    auto error_line(const std::string & text) -> unsigned
    {
        std::istringstream s(text);
        try {
            read_graph(s);
        }
        catch (const FormatError & e) {
            return e.line();
        }
        return 0;
    }
}

TEST(Dimacs, RoundTripKeepsHash)
{
    for (auto g : { cycle_graph(5), paley(13), er_polarity(5), petersen_graph(), fixture::random_graph(30, 0.3, 4),
             make_graph(0, {}), make_graph(4, {}) }) {
        auto back = round_trip(g).graph;
        EXPECT_EQ(back.size(), g.size());
        EXPECT_TRUE(back.same_edges(g));
        EXPECT_EQ(edge_list_hash(back), edge_list_hash(g));
        EXPECT_EQ(edge_list_hash(g), reference_hash(g));
        EXPECT_EQ(back.provenance(), g.provenance());
    }
}

TEST(Dimacs, HashIgnoresInsertionOrder)
{
    auto a = make_graph(4, { { 0, 1 }, { 2, 3 }, { 1, 2 } });
    auto b = make_graph(4, { { 3, 2 }, { 2, 1 }, { 1, 0 } });
    EXPECT_EQ(edge_list_hash(a), edge_list_hash(b));
    EXPECT_NE(edge_list_hash(a), edge_list_hash(make_graph(4, { { 0, 1 }, { 1, 2 } })));
}

TEST(Dimacs, LabelsAndBipartiteSurvive)
{
    auto host = pg_incidence(3);
    auto file = round_trip(host.to_graph(), host.left_size());
    ASSERT_TRUE(file.left_size);
    EXPECT_EQ(*file.left_size, 13u);
    auto back = as_bipartite(file.graph, *file.left_size);
    EXPECT_EQ(back.edge_count(), host.edge_count());

    GraphBuilder b(3);
    b.add_edge(0, 1).set_labels({ "a", "b c", "d" }).set_provenance("cycle(n=3)");
    auto g = b.build();
    auto labelled = round_trip(g).graph;
    EXPECT_EQ(labelled.labels(), g.labels());
}

TEST(Dimacs, ErrorsCarryLineNumbers)
{
    EXPECT_EQ(error_line("p edge 3 1\ne 3 3\n"), 2u);
    EXPECT_EQ(error_line("p edge 3 2\ne 1 2\ne 2 1\n"), 3u);
    EXPECT_EQ(error_line("c x\np edge 3 1\ne 1 4\n"), 3u);
    EXPECT_EQ(error_line("p edg 3 1\n"), 1u);
    EXPECT_EQ(error_line("e 1 2\np edge 3 1\n"), 1u);
    EXPECT_EQ(error_line("p edge 3 2\ne 1 2\n"), 2u);
    EXPECT_EQ(error_line("p edge 3 1\np edge 3 1\n"), 2u);
    EXPECT_EQ(error_line("c bipartite 2 2\np edge 3 0\n"), 1u);
    EXPECT_EQ(error_line("c bipartite 1 2\np edge 3 1\ne 2 3\n"), 1u);
    std::istringstream empty("");
    EXPECT_THROW(read_graph(empty), FormatError);
}

TEST(Certificate, JsonRoundTrip)
{
    auto paley_cert = certify(paley(13), ForbiddenPattern::clique(4)).certificate;
    ASSERT_TRUE(paley_cert);
    auto sampled = sample_ramsey_graph(er_polarity(5), ForbiddenPattern::cycle(4), 6, 0.6, 3);
    ASSERT_TRUE(sampled.sampling);
    for (auto & c : { *paley_cert, sampled }) {
        auto text = certificate_to_json(c);
        auto back = certificate_from_json(text);
        EXPECT_EQ(back, c);
        EXPECT_EQ(certificate_to_json(back), text);
    }
}

TEST(Certificate, JsonRejectsUnknownAndMissingKeys)
{
    auto c = *certify(paley(13), ForbiddenPattern::clique(4)).certificate;
    auto text = certificate_to_json(c);

    auto extra = text;
    extra.insert(text.find('{') + 1, "\n  \"colour\": \"blue\",");
    EXPECT_THROW(certificate_from_json(extra), FormatError);

    auto missing = text;
    auto at = missing.find("  \"t\":");
    ASSERT_NE(at, std::string::npos);
    missing.erase(at, missing.find('\n', at) - at + 1);
    EXPECT_THROW(certificate_from_json(missing), FormatError);

    auto wrong_type = text;
    auto t_at = wrong_type.find("\"t\": 4");
    ASSERT_NE(t_at, std::string::npos);
    wrong_type.replace(t_at, 6, "\"t\": \"4\"");
    EXPECT_THROW(certificate_from_json(wrong_type), FormatError);

    EXPECT_THROW(certificate_from_json("{ not json"), FormatError);
}
