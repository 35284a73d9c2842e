/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_TESTS_FIXTURES_HH
#define RAMSEY_TESTS_FIXTURES_HH 1

#include <ramsey/graph.hh>
#include <ramsey/random.hh>

#include <string>

namespace fixture
{
    /// G(n, p) from a seeded stream, pairs in lexicographic order.
    inline auto random_graph(unsigned n, double p, std::uint64_t seed) -> ramsey::Graph
    {
        ramsey::Xoshiro256 rng(seed);
        ramsey::GraphBuilder b(n);
        for (unsigned u = 0; u < n; ++u)
            for (unsigned v = u + 1; v < n; ++v)
                if (rng.uniform() < p)
                    b.add_edge(u, v);
        b.set_provenance("random(n=" + std::to_string(n) + ",seed=" + std::to_string(seed) + ")");
        return b.build();
    }

    inline auto heawood() -> ramsey::Graph
    {
        ramsey::GraphBuilder b(14);
        for (unsigned i = 0; i < 14; ++i)
            b.add_edge(i, (i + 1) % 14);
        for (unsigned i = 0; i < 14; i += 2)
            b.add_edge(i, (i + 5) % 14);
        return b.build();
    }

    /// C4 with one extra vertex hanging off vertex 0.
    inline auto c4_with_pendant() -> ramsey::Graph
    {
        return ramsey::make_graph(5, { { 0, 1 }, { 1, 2 }, { 2, 3 }, { 0, 3 }, { 0, 4 } });
    }
}

#endif
