/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_PATTERNS_HH
#define RAMSEY_PATTERNS_HH 1

#include <ramsey/graph.hh>
#include <ramsey/graphcore.hh>

#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    /// A partition of E(F) into edge-disjoint parts, each with at least one edge.
    using EdgePartition = std::vector<std::vector<Edge>>;

    /// F_P: vertices V(F) then one apex x_i per part (x_i = |V(F)| + i); x_i is
    /// joined to every vertex the i-th part touches. No edge of F survives.
    auto build_fp(const Graph & f, const EdgePartition & parts) -> Graph;

    /// Isomorphism-invariant string: the upper-triangle adjacency bits under
    /// the lexicographically least labelling reachable by
    /// individualisation-refinement.
    auto canonical_form(const Graph &) -> std::string;

    struct PatternMember
    {
        Graph graph;
        EdgePartition partition;
        std::string canonical;
    };

    struct PatternFamily
    {
        Graph base;
        std::vector<PatternMember> members;
        /// Number of path partitions enumerated before deduplication.
        unsigned partitions_enumerated = 0;
    };

    inline constexpr unsigned max_pattern_base_edges = 10;

    /// L(F): F_P over every partition of E(F) into paths, deduplicated up to
    /// isomorphism, in order of first appearance.
    auto lf_family(const Graph & f) -> PatternFamily;

    struct LfFreeResult
    {
        bool free = true;
        /// Index into the family's members, and the embedding, when not free.
        std::optional<unsigned> member;
        std::vector<Vertex> embedding;
    };

    auto is_lf_free(const Graph & host, const PatternFamily & family,
            std::uint64_t budget = default_search_budget) -> LfFreeResult;

    auto is_lf_free(const Graph & host, const Graph & f,
            std::uint64_t budget = default_search_budget) -> LfFreeResult;

    /// The cycle length if g is one cycle plus degree-one vertices hanging
    /// off it (and nothing else), otherwise nullopt.
    auto cycle_with_pendants(const Graph & g) -> std::optional<unsigned>;
}

#endif
