/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_ALGEBRA_HH
#define RAMSEY_ALGEBRA_HH 1

#include <cstdint>
#include <compare>
#include <memory>
#include <vector>

namespace ramsey
{
    /// A field element as its canonical index: the coefficients of its
    /// polynomial representative, read as base-p digits with the constant
    /// term least significant.
    using Element = std::uint32_t;

    /// GF(p^k) for k <= 4 and p^k <= 2^20. The modulus is the monic
    /// irreducible of degree k whose lower coefficients, encoded like an
    /// element, form the smallest index.
    class FiniteField
    {
        public:
            static constexpr unsigned max_degree = 4;
            static constexpr std::uint32_t max_order = 1u << 20;

            FiniteField(std::uint32_t p, unsigned k);

            auto characteristic() const -> std::uint32_t
            {
                return _p;
            }

            auto degree() const -> unsigned
            {
                return _k;
            }

            auto order() const -> std::uint32_t
            {
                return _q;
            }

            /// Coefficients c_0 .. c_{k-1} of the modulus; the leading 1 is implicit.
            auto modulus() const -> const std::vector<std::uint32_t> &
            {
                return _modulus;
            }

            auto add(Element a, Element b) const -> Element;
            auto sub(Element a, Element b) const -> Element;
            auto neg(Element a) const -> Element;
            auto mul(Element a, Element b) const -> Element;
            auto inv(Element a) const -> Element;
            auto pow(Element a, std::uint64_t e) const -> Element;

            auto one() const -> Element
            {
                return 1;
            }

            auto is_square(Element a) const -> bool;

            friend auto operator== (const FiniteField & a, const FiniteField & b) -> bool
            {
                return a._p == b._p && a._k == b._k;
            }

        private:
            std::uint32_t _p;
            unsigned _k;
            std::uint32_t _q;
            std::vector<std::uint32_t> _modulus;
            std::vector<std::uint32_t> _digit_weight;
            std::vector<bool> _square;

            auto _digits(Element a) const -> std::vector<std::uint32_t>;
            auto _from_digits(const std::vector<std::uint32_t> &) const -> Element;
    };

    auto is_prime(std::uint64_t n) -> bool;

    /// Returns (p, k) if q = p^k for a prime p, otherwise (0, 0).
    auto prime_power(std::uint64_t q) -> std::pair<std::uint32_t, unsigned>;

    auto make_field(std::uint32_t p, unsigned k) -> FiniteField;

    /// Field of order q, which must be a prime power.
    auto field_of_order(std::uint64_t q) -> FiniteField;

    /// Sorted set { a^2 : a != 0 }. Requires odd order.
    auto quadratic_residues(const FiniteField &) -> std::vector<Element>;

    /// Homogeneous coordinates normalised so the first nonzero entry is 1.
    struct ProjectivePoint
    {
        std::vector<Element> coordinates;

        auto operator<=> (const ProjectivePoint &) const = default;
    };

    /// Every point of PG(dim, q), in lexicographic coordinate order.
    auto projective_points(const FiniteField &, unsigned dim) -> std::vector<ProjectivePoint>;

    /// Scales a nonzero vector so its first nonzero coordinate is 1.
    auto normalise(const FiniteField &, std::vector<Element> v) -> ProjectivePoint;

    auto dot(const FiniteField &, const std::vector<Element> &, const std::vector<Element> &) -> Element;

    auto projective_point_count(std::uint64_t q, unsigned dim) -> std::uint64_t;
}

#endif
