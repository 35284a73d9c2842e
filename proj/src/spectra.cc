/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/spectra.hh>
#include <ramsey/graphcore.hh>
#include <ramsey/errors.hh>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

using namespace ramsey;

auto ramsey::spectrum(const Graph & g) -> std::vector<double>
{
    const unsigned n = g.size();
    if (n > max_spectrum_size)
        throw SizeExceeded("spectrum limited to " + std::to_string(max_spectrum_size) + " vertices; got " + std::to_string(n));
    if (n == 0)
        return {};

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (auto [u, v] : g.edges()) {
        a(u, v) = 1.0;
        a(v, u) = 1.0;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("symmetric eigensolver did not converge");

    std::vector<double> result(solver.eigenvalues().data(), solver.eigenvalues().data() + n);
    std::sort(result.begin(), result.end(), std::greater<>());
    return result;
}

auto ramsey::singular_values(const BipartiteGraph & g) -> std::vector<double>
{
    const unsigned m = g.left_size(), n = g.right_size();
    if (m > max_spectrum_size || n > max_spectrum_size)
        throw SizeExceeded("biadjacency too large for a dense decomposition");
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(m, n);
    for (Vertex u = 0 ; u < m ; ++u)
        for (Vertex v : g.left_neighbourhood(u).to_vector())
            b(u, v) = 1.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(b);
    auto & s = svd.singularValues();
    return std::vector<double>(s.data(), s.data() + s.size());
}

auto ramsey::second_eigenvalue_magnitude(const std::vector<double> & descending) -> double
{
    double result = 0.0;
    for (unsigned i = 1 ; i < descending.size() ; ++i)
        result = std::max(result, std::abs(descending[i]));
    return result;
}

auto ramsey::ndl_report(const Graph & g, const std::vector<unsigned> & s_values) -> SpectralReport
{
    SpectralReport r;
    r.n = g.size();
    r.is_regular = g.is_regular();
    r.d = g.max_degree();
    r.degree_profile = g.degree_profile();
    r.eigenvalues = spectrum(g);
    r.lambda = second_eigenvalue_magnitude(r.eigenvalues);
    r.bipartite = is_bipartite(g);
    r.trace_cube = 6 * triangle_count(g);
    for (auto s : s_values)
        r.ssv_ratio[s] = r.lambda * std::pow(double(r.n), double(s) - 2.0) / std::pow(double(r.d), double(s) - 1.0);
    return r;
}

auto ramsey::trace_cube_check(const Graph & g, const SpectralReport & report) -> TraceCubeCheck
{
    TraceCubeCheck c;
    c.applicable = report.is_regular && report.n > 0;
    c.trace = report.trace_cube;
    c.triangle_free = report.trace_cube == 0;
    if (! c.applicable)
        return c;

    const double d = report.d;
    c.d_cubed = d * d * d;
    c.lower_bound = c.d_cubed - std::pow(report.lambda, 3.0) * (double(report.n) - 1.0);
    c.pass = double(c.trace) >= c.lower_bound - spectral_tolerance * c.d_cubed
        && 6 * triangle_count(g) == report.trace_cube;
    return c;
}
