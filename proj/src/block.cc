/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/block.hh>
#include <ramsey/errors.hh>
#include <ramsey/random.hh>

#include <cmath>
#include <string>

using namespace ramsey;

auto ramsey::block_construct(const BipartiteGraph & g, std::uint64_t seed) -> BlockResult
{
    Xoshiro256 rng(seed);
    BlockPartition partition{ seed, {} };
    partition.parts.reserve(g.left_size());
    for (Vertex u = 0 ; u < g.left_size() ; ++u) {
        auto & [a, b] = partition.parts.emplace_back();
        auto & row = g.left_neighbourhood(u);
        for (Vertex v = row.first() ; v < g.right_size() ; v = row.next(v))
            (rng.bit() ? b : a).push_back(v);
    }
    auto graph = block_graph(g, partition);
    return BlockResult{ std::move(graph), std::move(partition) };
}

auto ramsey::block_graph(const BipartiteGraph & g, const BlockPartition & partition) -> Graph
{
    if (partition.parts.size() != g.left_size())
        throw InvalidArgument("block partition does not cover U");
    GraphBuilder builder(g.right_size());
    for (Vertex u = 0 ; u < g.left_size() ; ++u) {
        auto & [a, b] = partition.parts[u];
        if (a.size() + b.size() != g.left_degree(u))
            throw InvalidArgument("block partition of N(" + std::to_string(u) + ") has the wrong size");
        for (auto x : a) {
            if (! g.adjacent(u, x))
                throw InvalidArgument("block partition puts a non-neighbour in A_" + std::to_string(u));
            for (auto y : b) {
                if (! g.adjacent(u, y))
                    throw InvalidArgument("block partition puts a non-neighbour in B_" + std::to_string(u));
                builder.add_edge(x, y);
            }
        }
    }
    builder.set_provenance(g.provenance() + " | block(seed=" + std::to_string(partition.seed) + ")");
    return builder.build();
}

auto DyadicProbability::value() const -> double
{
    return std::ldexp(1.0, static_cast<int>(log2_exact));
}

auto ramsey::indep_probability(const BipartiteGraph & g, const std::vector<Vertex> & subset) -> DyadicProbability
{
    Bitset in_subset(g.right_size());
    for (auto v : subset) {
        if (v >= g.right_size())
            throw InvalidArgument("vertex " + std::to_string(v) + " is not in V");
        in_subset.set(v);
    }

    DyadicProbability result;
    for (Vertex u = 0 ; u < g.left_size() ; ++u) {
        std::int64_t t = g.left_neighbourhood(u).intersection_count(in_subset);
        result.log2_all_factors += 1 - t;
        if (t >= 1)
            result.log2_exact += 1 - t;
    }
    return result;
}
