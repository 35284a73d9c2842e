/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_GRAPHCORE_HH
#define RAMSEY_GRAPHCORE_HH 1

#include <ramsey/graph.hh>

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace ramsey
{
    /// Length of a shortest cycle; nullopt for forests.
    auto girth(const Graph &) -> std::optional<unsigned>;

    /// Vertices of some K_s in g, or nullopt if g is K_s-free. s >= 2.
    auto find_clique(const Graph &, unsigned s) -> std::optional<std::vector<Vertex>>;

    /// A cycle of exactly the given length (as a subgraph, not necessarily
    /// induced), listed in cyclic order. 3 <= length <= 16.
    auto find_cycle(const Graph &, unsigned length) -> std::optional<std::vector<Vertex>>;

    inline constexpr std::uint64_t default_search_budget = 200'000'000;

    inline constexpr unsigned max_pattern_size = 12;

    /// Injective map from pattern vertices to host vertices carrying every
    /// pattern edge onto a host edge. Throws SizeExceeded for patterns over
    /// twelve vertices and BudgetExhausted when the node budget runs out.
    auto subgraph_embed(const Graph & pattern, const Graph & host,
            std::uint64_t budget = default_search_budget) -> std::optional<std::vector<Vertex>>;

    enum class IndependenceMode
    {
        exact,
        lower_bound
    };

    struct IndependenceResult
    {
        unsigned alpha = 0;
        std::vector<Vertex> witness;
        /// True only if alpha is proven optimal.
        bool exact = false;
        /// Best proven upper bound; equals alpha when exact.
        unsigned upper_bound = 0;
        std::uint64_t nodes = 0;
    };

    struct IndependenceOptions
    {
        IndependenceMode mode = IndependenceMode::exact;
        std::uint64_t budget = default_search_budget;
        /// Lower-bound mode only.
        std::uint64_t seed = 0;
        unsigned restarts = 0;
    };

    /// Exact mode: branch and bound for a maximum clique of the complement,
    /// bounded by greedy colouring. If the budget runs out the best set found
    /// is returned with exact = false. Lower-bound mode: seeded randomised
    /// greedy construction plus (1,2)-swap local search.
    auto independence_number(const Graph &, const IndependenceOptions & = {}) -> IndependenceResult;

    auto is_independent(const Graph &, const std::vector<Vertex> &) -> bool;

    /// Number of independent vertex subsets of size t.
    auto count_independent_sets(const Graph &, unsigned t,
            std::uint64_t budget = default_search_budget) -> std::uint64_t;

    /// G[vertices]; vertices must be distinct and in range. New vertex i is
    /// the i-th smallest member of the set.
    auto induced_subgraph(const Graph &, std::vector<Vertex> vertices) -> Graph;

    /// g plus every edge between a and b. a and b must be disjoint.
    auto complete_bipartite_overlay(const Graph &, const std::vector<Vertex> & a,
            const std::vector<Vertex> & b) -> Graph;

    auto triangle_count(const Graph &) -> std::uint64_t;

    auto is_bipartite(const Graph &) -> bool;

    auto complement(const Graph &) -> Graph;
}

#endif
