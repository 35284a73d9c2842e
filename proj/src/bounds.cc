/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/bounds.hh>
#include <ramsey/errors.hh>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <numbers>

using namespace ramsey;

using boost::multiprecision::cpp_int;
using Float = boost::multiprecision::cpp_bin_float_100;

auto ramsey::raw_sampling_probability(std::uint64_t n, double lambda) -> double
{
    const double ln_n = std::log(double(n));
    return ln_n * ln_n / (2.0 * std::numbers::e * std::numbers::e * lambda);
}

auto ramsey::sampling_probability(std::uint64_t n, double lambda) -> double
{
    return std::min(1.0, raw_sampling_probability(n, lambda));
}

auto ramsey::alon_rodl_bound(std::uint64_t n, std::uint64_t d, double lambda, std::uint64_t t) -> AlonRodlReport
{
    if (n < 2)
        throw InvalidArgument("Alon-Rodl bound needs n >= 2");
    if (d < 1)
        throw InvalidArgument("Alon-Rodl bound needs d >= 1");
    if (! (lambda > 0.5))
        throw InvalidArgument("Alon-Rodl bound needs lambda > 1/2");
    if (t < 1)
        throw InvalidArgument("Alon-Rodl bound needs t >= 1");

    AlonRodlReport r;
    r.n = n;
    r.d = d;
    r.t = t;
    r.lambda = lambda;

    const double e2 = std::numbers::e * std::numbers::e;
    const double ln_n = std::log(double(n));
    const double base = 2.0 * e2 * lambda / (ln_n * ln_n);
    r.log_final_bound = double(t) * std::log(base);
    r.final_bound = std::pow(base, double(t));

    double ell = std::ceil(double(t) / ln_n);
    r.ell_capped = ell > double(t);
    r.ell = r.ell_capped ? t : static_cast<std::uint64_t>(ell);

    const double td = double(t), ld = double(r.ell);
    const double log_choose = std::lgamma(td + 1) - std::lgamma(ld + 1) - std::lgamma(td - ld + 1);
    r.log_intermediate_bound = -std::lgamma(td + 1) + log_choose + ld * ln_n
        + (td - ld) * std::log(2.0 * lambda * double(n) / double(d));
    r.intermediate_bound = std::exp(r.log_intermediate_bound);

    r.t_threshold = 2.0 * double(n) * ln_n * ln_n / double(d);
    r.threshold_t = static_cast<std::uint64_t>(std::ceil(r.t_threshold));

    r.d_at_least_one = d >= 1;
    r.lambda_above_half = lambda > 0.5;
    r.t_above_threshold = double(t) >= r.t_threshold;
    return r;
}

namespace
{
    auto parse_positive(const std::string & s, const char * name) -> cpp_int
    {
        if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
            throw InvalidArgument(std::string(name) + " must be a positive decimal integer, got '" + s + "'");
        cpp_int v(s);
        if (v <= 0)
            throw InvalidArgument(std::string(name) + " must be positive");
        return v;
    }
}

auto ramsey::block_feasibility(const std::string & m_text, const std::string & n_text,
        const std::string & c_text, const std::string & t_text, FeasibilityMode mode) -> FeasibilityReport
{
    const cpp_int m = parse_positive(m_text, "m"), n = parse_positive(n_text, "n"),
          d_or_q = parse_positive(c_text, mode == FeasibilityMode::hexagon ? "q" : "d"),
          t = parse_positive(t_text, "t");
    const cpp_int c = mode == FeasibilityMode::hexagon ? cpp_int(d_or_q + 1) : d_or_q;

    FeasibilityReport r;
    r.mode = mode;
    r.m = m.str();
    r.n = n.str();
    r.d_or_q = d_or_q.str();
    r.t = t.str();

    const unsigned floor_log2 = boost::multiprecision::msb(n);
    const bool exact_power = (cpp_int(1) << floor_log2) == n;
    const cpp_int low = t * floor_log2 + m - c * t;
    const cpp_int high = exact_power ? low : cpp_int(low + t);
    r.exponent_floor = low.str();
    r.exponent_ceiling = high.str();

    Float log2_n = boost::multiprecision::log(Float(n)) / boost::multiprecision::log(Float(2));
    Float exponent = Float(t) * log2_n + Float(m) - Float(c) * Float(t);
    r.exponent = static_cast<double>(exponent);

    if (exact_power) {
        r.sign = low > 0 ? 1 : low < 0 ? -1 : 0;
        r.decided_by = "integer-bracket";
    }
    else if (low >= 0) {
        // log2 n is strictly above its floor.
        r.sign = 1;
        r.decided_by = "integer-bracket";
    }
    else if (high <= 0) {
        r.sign = -1;
        r.decided_by = "integer-bracket";
    }
    else {
        // log2 n is irrational here, so the exponent is never exactly zero.
        r.sign = exponent > 0 ? 1 : -1;
        r.decided_by = "high-precision";
    }

    r.feasible = r.sign < 0;
    if (r.feasible)
        r.claim = "r(F," + r.t + ") > " + r.n;
    return r;
}

auto ramsey::block_feasibility(std::uint64_t m, std::uint64_t n, std::uint64_t d_or_q, std::uint64_t t,
        FeasibilityMode mode) -> FeasibilityReport
{
    return block_feasibility(std::to_string(m), std::to_string(n), std::to_string(d_or_q), std::to_string(t), mode);
}

auto ramsey::hexagon_parameters(std::uint64_t q) -> HexagonParameters
{
    const cpp_int qq = q;
    const cpp_int common = pow(qq, 8) + pow(qq, 4) + 1;
    return HexagonParameters{ cpp_int((qq + 1) * common).str(), cpp_int((pow(qq, 3) + 1) * common).str(), q + 1 };
}

auto ramsey::scaled_q8(std::uint64_t q, std::uint64_t numerator, std::uint64_t denominator) -> std::string
{
    const cpp_int top = pow(cpp_int(q), 8) * numerator;
    cpp_int result = top / denominator;
    if (result * denominator != top)
        ++result;
    return result.str();
}
