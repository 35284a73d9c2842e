/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/algebra.hh>
#include <ramsey/atlas.hh>
#include <ramsey/errors.hh>
#include <ramsey/graphcore.hh>
#include <ramsey/spectra.hh>

#include "fixtures.hh"
#include "oracles.hh"

#include <gtest/gtest.h>

#include <cmath>

using namespace ramsey;

TEST(Paley, Examples)
{
    EXPECT_TRUE(oracle::isomorphic(paley(5), cycle_graph(5)));
    auto p = paley(13);
    EXPECT_EQ(p.size(), 13u);
    EXPECT_TRUE(p.is_regular());
    EXPECT_EQ(p.max_degree(), 6u);
    EXPECT_EQ(p.provenance(), "paley(q=13)");
    EXPECT_THROW(paley(7), InvalidArgument);
    EXPECT_THROW(paley(15), InvalidArgument);
    auto p9 = paley(9);
    EXPECT_TRUE(p9.is_regular());
    EXPECT_EQ(p9.max_degree(), 4u);
}

TEST(Paley, AdjacencyIsDifferenceSquare)
{
    auto f = field_of_order(25);
    auto g = paley(25);
    for (Element a = 0; a < 25; ++a)
        for (Element b = 0; b < 25; ++b)
            if (a != b)
                ASSERT_EQ(g.adjacent(a, b), f.is_square(f.sub(a, b)));
}

TEST(Polarity, ErParameters)
{
    auto g2 = er_polarity(2);
    EXPECT_EQ(g2.size(), 7u);
    EXPECT_EQ(g2.edge_count(), 9u);
    EXPECT_EQ(g2.degree_profile(), (std::map<unsigned, unsigned>{ { 2, 3 }, { 3, 4 } }));
    EXPECT_EQ(er_polarity(4).size(), 21u);

    for (std::uint64_t q : { 2, 3, 4, 5, 7, 8, 9, 11, 13 }) {
        auto g = er_polarity(q);
        ASSERT_EQ(g.size(), q * q + q + 1);
        ASSERT_EQ(g.edge_count(), q * (q + 1) * (q + 1) / 2);
        ASSERT_EQ(g.degree_profile().at(q), q + 1);
        ASSERT_FALSE(find_cycle(g, 4)) << q;
    }
}

TEST(Polarity, PolarityGraphOfPlaneIsEr)
{
    for (std::uint64_t q : { 2, 3, 4, 5 }) {
        auto plane = projective_plane(q);
        auto pol = find_polarity(plane);
        ASSERT_TRUE(pol);
        EXPECT_EQ(pol->absolute_points.size(), q + 1);
        EXPECT_TRUE(is_polarity(plane, pol->line_of_point));
        auto g = polarity_graph(plane, *pol, "x");
        EXPECT_TRUE(g.same_edges(er_polarity(q)));
    }
}

TEST(Polarity, SymplecticQuadrangleOfOrderTwo)
{
    auto w = symplectic_quadrangle(2);
    EXPECT_EQ(w.point_count(), 15u);
    auto pol = find_polarity(w);
    ASSERT_TRUE(pol);
    EXPECT_TRUE(is_polarity(w, pol->line_of_point));
    auto g = polarity_graph(w, *pol, "w32");
    EXPECT_EQ(g.size(), 15u);
    EXPECT_FALSE(find_cycle(g, 4));
    EXPECT_FALSE(find_cycle(g, 6));
    auto ev = spectrum(g);
    for (std::size_t i = 1; i < ev.size(); ++i)
        EXPECT_LE(std::abs(ev[i]), 3.0 + 1e-9);
}

TEST(Polarity, NoDualityFound)
{
    // Three points; one line of size two and one of size one: no bijection
    // between points and lines exists at all.
    IncidenceStructure odd(3, { { 0, 1 }, { 2 } });
    EXPECT_FALSE(find_polarity(odd));
    // Two lines through point 0 only: point 1 lies on no line, so it can
    // never lie on the polar of point 1's partner.
    IncidenceStructure lopsided(2, { { 0 }, { 0 } });
    EXPECT_FALSE(find_polarity(lopsided));
    // This one looks lopsided but its incidence matrix is symmetric.
    IncidenceStructure staircase(3, { { 0 }, { 0, 1 }, { 0, 1, 2 } });
    EXPECT_TRUE(find_polarity(staircase));
}

TEST(Geometry, ProjectivePlaneAxioms)
{
    for (std::uint64_t q : { 2, 3, 4, 5, 7 }) {
        auto plane = projective_plane(q);
        unsigned n = plane.point_count();
        ASSERT_EQ(n, q * q + q + 1);
        ASSERT_EQ(plane.line_count(), n);
        for (unsigned l = 0; l < n; ++l)
            ASSERT_EQ(plane.line(l).size(), q + 1);
        for (Vertex p = 0; p < n; ++p)
            ASSERT_EQ(plane.pencil(p).size(), q + 1);
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                unsigned common = 0;
                for (unsigned l = 0; l < n; ++l)
                    common += plane.incident(a, l) && plane.incident(b, l);
                ASSERT_EQ(common, 1u);
            }
    }
}

TEST(Geometry, QuadrangleCounts)
{
    for (std::uint64_t q : { 2, 3, 4 }) {
        auto w = symplectic_quadrangle(q);
        auto count = (q + 1) * (q * q + 1);
        ASSERT_EQ(w.point_count(), count);
        ASSERT_EQ(w.line_count(), count);
        for (unsigned l = 0; l < w.line_count(); ++l)
            ASSERT_EQ(w.line(l).size(), q + 1);
        for (Vertex p = 0; p < w.point_count(); ++p)
            ASSERT_EQ(w.pencil(p).size(), q + 1);
    }
}

TEST(Incidence, ProjectivePlanes)
{
    auto h = pg_incidence(2);
    EXPECT_EQ(h.to_graph().size(), 14u);
    EXPECT_EQ(h.biregularity(), (std::pair<unsigned, unsigned>{ 3, 3 }));
    EXPECT_EQ(girth(h.to_graph()), 6u);
    EXPECT_EQ(oracle::edge_deletion_girth(h.to_graph()), 6u);

    auto h3 = pg_incidence(3);
    EXPECT_EQ(h3.to_graph().size(), 26u);
    EXPECT_EQ(h3.biregularity(), (std::pair<unsigned, unsigned>{ 4, 4 }));
    EXPECT_EQ(girth(h3.to_graph()), 6u);
}

TEST(Incidence, Quadrangles)
{
    for (std::uint64_t q : { 2, 3, 4 }) {
        auto g = gq_incidence(q);
        auto side = (q + 1) * (q * q + 1);
        ASSERT_EQ(g.left_size(), side);
        ASSERT_EQ(g.right_size(), side);
        ASSERT_EQ(g.biregularity(), (std::pair<unsigned, unsigned>{ unsigned(q + 1), unsigned(q + 1) }));
        ASSERT_EQ(girth(g.to_graph()), 8u);
        ASSERT_EQ(oracle::edge_deletion_girth(g.to_graph()), 8u);
    }
    EXPECT_EQ(gq_incidence(2).to_graph().size(), 30u);
    EXPECT_EQ(gq_incidence(3).to_graph().size(), 80u);
}

TEST(Dkq, GirthTable)
{
    struct Row { unsigned k; std::uint64_t q; unsigned at_least; };
    std::optional<unsigned> previous;
    for (auto row : { Row{ 2, 3, 6 }, Row{ 3, 3, 8 }, Row{ 4, 3, 8 }, Row{ 5, 3, 10 } }) {
        auto g = dkq(row.k, row.q);
        ASSERT_EQ(g.left_size(), unsigned(std::pow(row.q, row.k)));
        ASSERT_EQ(g.biregularity(), (std::pair<unsigned, unsigned>{ unsigned(row.q), unsigned(row.q) }));
        auto gi = girth(g.to_graph());
        ASSERT_TRUE(gi);
        ASSERT_GE(*gi, row.at_least) << row.k;
        ASSERT_EQ(gi, oracle::edge_deletion_girth(g.to_graph()));
        if (previous)
            ASSERT_GE(*gi, *previous);
        previous = gi;
    }

    auto d72 = dkq(7, 2);
    EXPECT_EQ(d72.left_size(), 128u);
    auto gi = girth(d72.to_graph());
    ASSERT_TRUE(gi);
    EXPECT_GE(*gi, 12u);
    EXPECT_THROW(dkq(8, 2), InvalidArgument);
    EXPECT_THROW(dkq(1, 2), InvalidArgument);
}

TEST(Small, NamedGraphs)
{
    EXPECT_EQ(petersen_graph().edge_count(), 15u);
    EXPECT_TRUE(petersen_graph().is_regular());
    EXPECT_EQ(complete_graph(5).edge_count(), 10u);
    EXPECT_EQ(path_graph(4).edge_count(), 3u);
    EXPECT_EQ(cycle_graph(6).edge_count(), 6u);
    EXPECT_THROW(cycle_graph(2), InvalidArgument);
}
