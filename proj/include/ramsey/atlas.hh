/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_ATLAS_HH
#define RAMSEY_ATLAS_HH 1

#include <ramsey/algebra.hh>
#include <ramsey/graph.hh>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    enum class GeometryKind
    {
        projective_plane,
        generalized_quadrangle,
        other
    };

    /// Points 0 .. p-1 and lines, each a sorted list of points. Line order is
    /// fixed by the constructing function.
    class IncidenceStructure
    {
        public:
            IncidenceStructure(unsigned point_count, std::vector<std::vector<Vertex>> lines,
                    GeometryKind kind = GeometryKind::other, std::uint64_t q = 0);

            auto point_count() const -> unsigned
            {
                return _point_count;
            }

            auto line_count() const -> unsigned
            {
                return _lines.size();
            }

            auto line(unsigned i) const -> const std::vector<Vertex> &
            {
                return _lines[i];
            }

            auto incident(Vertex point, unsigned line) const -> bool
            {
                return _incidence[line].test(point);
            }

            /// Lines through a point.
            auto pencil(Vertex point) const -> std::vector<unsigned>;

            auto kind() const -> GeometryKind
            {
                return _kind;
            }

            auto order() const -> std::uint64_t
            {
                return _q;
            }

            auto point_labels() const -> const std::vector<std::string> &
            {
                return _point_labels;
            }

            auto set_point_labels(std::vector<std::string> labels) -> void
            {
                _point_labels = std::move(labels);
            }

            /// U = lines, V = points.
            auto incidence_graph(std::string provenance) const -> BipartiteGraph;

        private:
            unsigned _point_count;
            std::vector<std::vector<Vertex>> _lines;
            std::vector<Bitset> _incidence;
            GeometryKind _kind;
            std::uint64_t _q;
            std::vector<std::string> _point_labels;
    };

    /// PG(2,q). Line i is the set of points orthogonal to point i under the
    /// standard dot product, so lines share the point numbering.
    auto projective_plane(std::uint64_t q) -> IncidenceStructure;

    /// W(3,q): points of PG(3,q) and lines totally isotropic for
    /// x1*y2 - x2*y1 + x3*y4 - x4*y3, lines in lexicographic order.
    auto symplectic_quadrangle(std::uint64_t q) -> IncidenceStructure;

    /// An involutive duality, as the point -> line half of the map.
    struct Polarity
    {
        std::vector<unsigned> line_of_point;
        std::vector<Vertex> absolute_points;
    };

    /// True iff line_of_point is a bijection with p in line(r) <=> r in line(p).
    auto is_polarity(const IncidenceStructure &, const std::vector<unsigned> & line_of_point) -> bool;

    /// For PG(2,q) the orthogonal polarity, without search; otherwise a
    /// backtracking search over at most 40 points. Throws BudgetExhausted if
    /// the search gives up, distinct from returning nullopt.
    auto find_polarity(const IncidenceStructure &, std::uint64_t budget = 50'000'000) -> std::optional<Polarity>;

    /// Points, with x ~ y iff x lies on the polar line of y (x != y).
    auto polarity_graph(const IncidenceStructure &, const Polarity &, std::string provenance) -> Graph;

    auto paley(std::uint64_t q) -> Graph;
    auto er_polarity(std::uint64_t q) -> Graph;
    auto pg_incidence(std::uint64_t q) -> BipartiteGraph;
    auto gq_incidence(std::uint64_t q) -> BipartiteGraph;

    /// The Lazebnik-Ustimenko-Woldar graph D(k,q): points and lines are both
    /// GF(q)^k, U = lines, V = points, vertex index = base-q reading of the
    /// coordinates with the first one most significant.
    auto dkq(unsigned k, std::uint64_t q) -> BipartiteGraph;

    auto cycle_graph(unsigned n) -> Graph;
    auto path_graph(unsigned n) -> Graph;
    auto complete_graph(unsigned n) -> Graph;
    auto petersen_graph() -> Graph;
}

#endif
