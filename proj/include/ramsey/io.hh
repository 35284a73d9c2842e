/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_IO_HH
#define RAMSEY_IO_HH 1

#include <ramsey/certificate.hh>
#include <ramsey/graph.hh>

#include <iosfwd>
#include <optional>
#include <string>

namespace ramsey
{
    /// A graph as stored on disk. When left_size is set, vertices
    /// 0 .. left_size-1 form the U side of a bipartite graph.
    struct GraphFile
    {
        Graph graph;
        std::optional<unsigned> left_size;
    };

    /// DIMACS edge format:
    ///
    ///     c provenance <text>
    ///     c bipartite <m> <n>
    ///     c label <v> <text>
    ///     p edge <n> <m>
    ///     e <u> <v>
    ///
    /// 1-indexed, u < v, edges sorted. Only the p line and the e lines are
    /// required on input; other comment lines are ignored.
    auto write_graph(std::ostream &, const Graph &, std::optional<unsigned> left_size = std::nullopt) -> void;
    auto write_graph(std::ostream &, const BipartiteGraph &) -> void;

    /// Throws FormatError carrying the offending line number.
    auto read_graph(std::istream &, const std::string & source = "<stream>") -> GraphFile;

    auto save_graph(const std::string & path, const Graph &, std::optional<unsigned> left_size = std::nullopt) -> void;
    auto load_graph(const std::string & path) -> GraphFile;

    inline constexpr int certificate_format_version = 1;

    auto certificate_to_json(const RamseyCertificate &) -> std::string;

    /// Rejects unknown or missing keys and wrong types with FormatError.
    auto certificate_from_json(const std::string &, const std::string & source = "<string>") -> RamseyCertificate;

    auto save_certificate(const std::string & path, const RamseyCertificate &) -> void;
    auto load_certificate(const std::string & path) -> RamseyCertificate;
}

#endif
