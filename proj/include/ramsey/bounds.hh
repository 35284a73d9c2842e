/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_BOUNDS_HH
#define RAMSEY_BOUNDS_HH 1

#include <cstdint>
#include <string>

namespace ramsey
{
    /// Counting bound for independent t-sets in an (n,d,lambda)-graph.
    /// Natural logarithms throughout.
    struct AlonRodlReport
    {
        std::uint64_t n = 0, d = 0, t = 0;
        double lambda = 0.0;

        /// (2 e^2 lambda / ln^2 n)^t, and its logarithm.
        double final_bound = 0.0;
        double log_final_bound = 0.0;

        /// (1/t!) C(t,l) n^l (2 lambda n / d)^(t-l), and its logarithm.
        double intermediate_bound = 0.0;
        double log_intermediate_bound = 0.0;
        /// l = ceil(t / ln n), capped at t.
        std::uint64_t ell = 0;
        bool ell_capped = false;

        /// 2 n ln^2 n / d, and ceil of it.
        double t_threshold = 0.0;
        std::uint64_t threshold_t = 0;

        bool d_at_least_one = false;
        bool lambda_above_half = false;
        bool t_above_threshold = false;

        auto all_hypotheses() const -> bool
        {
            return d_at_least_one && lambda_above_half && t_above_threshold;
        }

        std::string log_base = "e";
    };

    /// Throws InvalidArgument unless n >= 2, d >= 1, lambda > 1/2, t >= 1.
    auto alon_rodl_bound(std::uint64_t n, std::uint64_t d, double lambda, std::uint64_t t) -> AlonRodlReport;

    /// min(1, ln^2 n / (2 e^2 lambda)).
    auto sampling_probability(std::uint64_t n, double lambda) -> double;

    /// ln^2 n / (2 e^2 lambda) before clamping.
    auto raw_sampling_probability(std::uint64_t n, double lambda) -> double;

    enum class FeasibilityMode
    {
        theorem5,
        hexagon
    };

    /// Both modes decide the sign of t log2 n + m - c t, where c = d in
    /// theorem5 mode (the claim r(F,t) > n holds iff it is negative) and
    /// c = q + 1 in hexagon mode (the expected number of independent t-sets,
    /// 2^exponent, drops below 1 iff it is negative).
    struct FeasibilityReport
    {
        FeasibilityMode mode = FeasibilityMode::theorem5;
        std::string m, n, d_or_q, t;

        /// Approximate value of the exponent.
        double exponent = 0.0;
        /// Exact sign: -1, 0 or +1.
        int sign = 0;
        /// Integer bracket [t floor(log2 n) + m - c t, ... + t].
        std::string exponent_floor, exponent_ceiling;
        /// "integer-bracket" or "high-precision".
        std::string decided_by;

        bool feasible = false;
        /// e.g. "r(F,t) > n" with numbers substituted, when feasible.
        std::string claim;

        std::string log_base = "2";
    };

    /// Arbitrary-size decimal integers; throws InvalidArgument on bad input.
    auto block_feasibility(const std::string & m, const std::string & n, const std::string & d_or_q,
            const std::string & t, FeasibilityMode) -> FeasibilityReport;

    auto block_feasibility(std::uint64_t m, std::uint64_t n, std::uint64_t d_or_q, std::uint64_t t,
            FeasibilityMode) -> FeasibilityReport;

    /// Part sizes of the incidence graph of a generalized hexagon of order (q, q^3).
    struct HexagonParameters
    {
        std::string m, n;
        std::uint64_t point_degree = 0;
    };

    auto hexagon_parameters(std::uint64_t q) -> HexagonParameters;

    /// ceil(numerator / denominator * q^8), exactly.
    auto scaled_q8(std::uint64_t q, std::uint64_t numerator, std::uint64_t denominator) -> std::string;
}

#endif
