/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_BLOCK_HH
#define RAMSEY_BLOCK_HH 1

#include <ramsey/graph.hh>

#include <cstdint>
#include <utility>
#include <vector>

namespace ramsey
{
    /// For each u in U, the split (A_u, B_u) of N(u), both sorted.
    struct BlockPartition
    {
        std::uint64_t seed = 0;
        std::vector<std::pair<std::vector<Vertex>, std::vector<Vertex>>> parts;
    };

    struct BlockResult
    {
        Graph graph;
        BlockPartition partition;
    };

    /// Graph on V: for every u in U, walk N(u) in increasing order and send
    /// each neighbour to A_u on a 0 bit and B_u on a 1 bit (one xoshiro256**
    /// draw per neighbour, u in increasing order), then add all A_u x B_u edges.
    auto block_construct(const BipartiteGraph &, std::uint64_t seed) -> BlockResult;

    /// The graph a given partition record produces.
    auto block_graph(const BipartiteGraph &, const BlockPartition &) -> Graph;

    /// Probability that a set I of V-vertices is independent in the block
    /// graph, as a power of two. With t_u = |I ∩ N(u)|, the exact law is
    /// the product over u with t_u >= 1 of 2^(1 - t_u); the looser product
    /// over every u (where t_u = 0 contributes a factor 2) is kept too.
    struct DyadicProbability
    {
        /// log2 of the exact probability; always <= 0.
        std::int64_t log2_exact = 0;
        /// log2 of the product of 2^(1 - t_u) over all of U, i.e. |U| - sum t_u.
        std::int64_t log2_all_factors = 0;

        auto value() const -> double;
    };

    auto indep_probability(const BipartiteGraph &, const std::vector<Vertex> & subset) -> DyadicProbability;
}

#endif
