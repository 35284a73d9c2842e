/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_CERTIFICATE_HH
#define RAMSEY_CERTIFICATE_HH 1

#include <ramsey/graph.hh>
#include <ramsey/graphcore.hh>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ramsey
{
    inline constexpr const char * tool_version = "ramsey-toolkit 0.1.0";

    enum class PatternKind
    {
        clique,
        cycle,
        explicit_graph
    };

    /// K_s, C_l, or a small explicit graph. Descriptors are "K4", "C5" and
    /// "graph(n=4;e=0-1,1-2,2-3)".
    struct ForbiddenPattern
    {
        PatternKind kind = PatternKind::clique;
        unsigned size = 0;
        /// Explicit patterns only.
        std::optional<Graph> graph;

        static auto clique(unsigned s) -> ForbiddenPattern;
        static auto cycle(unsigned l) -> ForbiddenPattern;
        static auto explicit_graph(const Graph &) -> ForbiddenPattern;

        auto descriptor() const -> std::string;
        /// The r(.,.) argument: "4" for K4 (classical r(s,t) notation), "C4", or "F".
        auto claim_symbol() const -> std::string;
        /// "find_clique(s=4)", "find_cycle(l=5)" or "subgraph_embed(n=..,m=..)".
        auto method() const -> std::string;
    };

    /// Throws InvalidArgument on anything unparseable.
    auto parse_pattern(const std::string & descriptor) -> ForbiddenPattern;

    struct FreenessResult
    {
        bool free = true;
        std::string method;
        /// Host vertices of an occurrence when not free.
        std::vector<Vertex> witness;
    };

    auto check_free(const Graph &, const ForbiddenPattern &,
            std::uint64_t budget = default_search_budget) -> FreenessResult;

    /// "r(4,4) > 13", "r(C4,30) > 133", ...
    auto claim_text(const ForbiddenPattern &, std::uint64_t t, std::uint64_t n) -> std::string;

    struct SamplingRecord
    {
        std::string host_provenance;
        std::uint64_t host_n = 0;
        std::uint64_t seed = 0;
        double lambda = 0.0;
        /// "spectrum" (second eigenvalue magnitude of the host) or "supplied".
        std::string lambda_source;
        /// ln^2 n / (2 e^2 lambda) before clamping.
        double p_formula = 0.0;
        /// The probability actually used.
        double p = 0.0;
        bool p_overridden = false;
        /// Host vertices kept by the coin flips, then the ones removed, in order.
        std::vector<Vertex> sampled;
        std::vector<Vertex> removed;
        /// ceil(2 n ln^2 n / d) with d the host's (maximum) degree.
        std::uint64_t threshold_t = 0;
        bool t_meets_threshold = false;

        auto operator==(const SamplingRecord &) const -> bool = default;
    };

    struct RamseyCertificate
    {
        std::string claim;
        std::string forbidden;
        std::string provenance;
        std::string family;
        std::map<std::string, std::uint64_t> parameters;
        std::vector<std::string> transformations;
        std::vector<std::uint64_t> seeds;
        std::uint64_t n = 0;
        std::uint64_t t = 0;
        unsigned alpha = 0;
        std::string alpha_mode;
        /// A maximum independent set, as witness-graph vertices.
        std::vector<Vertex> alpha_witness;
        std::string freeness_method;
        std::optional<SamplingRecord> sampling;
        std::string edge_hash;
        std::string tool_version;
        /// FNV-1a 64 over every other field; see certificate_digest.
        std::string digest;

        auto operator==(const RamseyCertificate &) const -> bool = default;
    };

    /// Hex FNV-1a 64 over a canonical "key=value" rendering of every field
    /// but the digest itself.
    auto certificate_digest(const RamseyCertificate &) -> std::string;

    struct CertifyOptions
    {
        std::uint64_t alpha_budget = default_search_budget;
        std::uint64_t pattern_budget = default_search_budget;
    };

    struct CertifyResult
    {
        std::optional<RamseyCertificate> certificate;
        /// Why no certificate was issued, and the offending vertices (a copy
        /// of the pattern, or an independent t-set).
        std::string refusal;
        std::vector<Vertex> witness;
    };

    /// The graph's provenance must rebuild it (see rebuild_graph). With no t,
    /// t = alpha + 1.
    auto certify(const Graph &, const ForbiddenPattern &, std::optional<std::uint64_t> t = std::nullopt,
            const CertifyOptions & = {}) -> CertifyResult;

    /// Keeps each vertex with probability p (one uniform draw per vertex in
    /// increasing order), then removes the least vertex of a maximum
    /// independent set until alpha < t. Unless supplied, lambda comes from
    /// the host's spectrum. Throws InvalidArgument if g contains the pattern.
    auto sample_ramsey_graph(const Graph &, const ForbiddenPattern &, std::uint64_t t,
            std::optional<double> p_override, std::uint64_t seed,
            std::optional<double> lambda = std::nullopt, const CertifyOptions & = {}) -> RamseyCertificate;

    struct VerificationReport
    {
        bool ok = false;
        std::vector<std::pair<std::string, bool>> checks;
        std::string error;
    };

    /// Cheap checks run first; the search-based ones are skipped once any check has failed.
    auto verify_certificate(const RamseyCertificate &, const CertifyOptions & = {}) -> VerificationReport;
}

#endif
