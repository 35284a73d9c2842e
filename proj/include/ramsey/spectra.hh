/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_SPECTRA_HH
#define RAMSEY_SPECTRA_HH 1

#include <ramsey/graph.hh>

#include <cstdint>
#include <map>
#include <vector>

namespace ramsey
{
    inline constexpr unsigned max_spectrum_size = 5000;

    /// Assertion tolerance, relative.
    inline constexpr double spectral_tolerance = 1e-6;

    /// Adjacency eigenvalues in descending order (dense symmetric solve).
    auto spectrum(const Graph &) -> std::vector<double>;

    /// Singular values of the U x V biadjacency matrix, descending.
    auto singular_values(const BipartiteGraph &) -> std::vector<double>;

    struct SpectralReport
    {
        unsigned n = 0;
        bool is_regular = false;
        /// The degree if regular, otherwise the maximum degree.
        unsigned d = 0;
        std::map<unsigned, unsigned> degree_profile;
        std::vector<double> eigenvalues;
        /// Largest |eigenvalue| once a single copy of the top eigenvalue is set aside.
        double lambda = 0.0;
        bool bipartite = false;
        /// s -> lambda * n^(s-2) / d^(s-1)
        std::map<unsigned, double> ssv_ratio;
        /// tr(A^3) = 6 * triangles, counted combinatorially.
        std::uint64_t trace_cube = 0;
    };

    /// lambda from a descending eigenvalue list.
    auto second_eigenvalue_magnitude(const std::vector<double> & descending) -> double;

    auto ndl_report(const Graph &, const std::vector<unsigned> & s_values = {}) -> SpectralReport;

    struct TraceCubeCheck
    {
        /// False for irregular graphs; nothing else is meaningful then.
        bool applicable = false;
        std::uint64_t trace = 0;
        double d_cubed = 0.0;
        /// d^3 - lambda^3 (n - 1)
        double lower_bound = 0.0;
        bool triangle_free = false;
        bool pass = false;
    };

    /// tr(A^3) >= d^3 - lambda^3 (n-1), within 1e-6 d^3.
    auto trace_cube_check(const Graph &, const SpectralReport &) -> TraceCubeCheck;
}

#endif
