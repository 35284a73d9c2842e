/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/algebra.hh>
#include <ramsey/errors.hh>

#include <algorithm>
#include <string>

using namespace ramsey;

namespace
{
    // Polynomials over GF(p) as coefficient vectors, constant term first.
    using Poly = std::vector<std::uint32_t>;

    auto trim(Poly & a) -> void
    {
        while (! a.empty() && a.back() == 0)
            a.pop_back();
    }

    auto poly_mod(Poly a, const Poly & m, std::uint32_t p) -> Poly
    {
        trim(a);
        // m is monic in every caller
        while (a.size() >= m.size()) {
            std::uint64_t c = a.back();
            unsigned shift = a.size() - m.size();
            for (unsigned i = 0 ; i < m.size() ; ++i)
                a[shift + i] = (a[shift + i] + (p - c) * m[i]) % p;
            trim(a);
        }
        return a;
    }

    /// Monic polynomial of degree d with lower coefficients given by the base-p digits of index.
    auto monic_from_index(std::uint64_t index, unsigned d, std::uint32_t p) -> Poly
    {
        Poly result(d + 1, 0);
        for (unsigned i = 0 ; i < d ; ++i) {
            result[i] = index % p;
            index /= p;
        }
        result[d] = 1;
        return result;
    }

    auto ipow(std::uint64_t b, unsigned e) -> std::uint64_t
    {
        std::uint64_t r = 1;
        while (e--)
            r *= b;
        return r;
    }

    /// Trial division by every monic polynomial of degree 1 .. k/2.
    auto irreducible(const Poly & f, std::uint32_t p) -> bool
    {
        unsigned k = f.size() - 1;
        for (unsigned d = 1 ; d <= k / 2 ; ++d)
            for (std::uint64_t idx = 0 ; idx < ipow(p, d) ; ++idx)
                if (poly_mod(f, monic_from_index(idx, d, p), p).empty())
                    return false;
        return true;
    }
}

auto ramsey::is_prime(std::uint64_t n) -> bool
{
    if (n < 2)
        return false;
    for (std::uint64_t d = 2 ; d * d <= n ; ++d)
        if (n % d == 0)
            return false;
    return true;
}

auto ramsey::prime_power(std::uint64_t q) -> std::pair<std::uint32_t, unsigned>
{
    if (q < 2)
        return { 0, 0 };
    std::uint64_t p = 2;
    while (q % p)
        ++p;
    unsigned k = 0;
    while (q % p == 0) {
        q /= p;
        ++k;
    }
    if (q != 1)
        return { 0, 0 };
    return { static_cast<std::uint32_t>(p), k };
}

FiniteField::FiniteField(std::uint32_t p, unsigned k) :
    _p(p),
    _k(k)
{
    if (! is_prime(p))
        throw InvalidArgument("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1 || k > max_degree)
        throw InvalidArgument("field extension degree " + std::to_string(k) + " outside 1.." + std::to_string(max_degree));
    std::uint64_t q = ipow(p, k);
    if (q > max_order)
        throw SizeExceeded("field order " + std::to_string(p) + "^" + std::to_string(k) + " exceeds 2^20");
    _q = q;

    for (unsigned i = 0 ; i < k ; ++i)
        _digit_weight.push_back(ipow(p, i));

    for (std::uint64_t idx = 0 ; idx < q ; ++idx) {
        Poly f = monic_from_index(idx, k, p);
        // For k = 1 every monic linear polynomial is irreducible; x itself is the least.
        if (irreducible(f, p)) {
            _modulus.assign(f.begin(), f.end() - 1);
            break;
        }
    }

    _square.assign(_q, false);
    for (Element a = 1 ; a < _q ; ++a)
        _square[mul(a, a)] = true;
}

auto FiniteField::_digits(Element a) const -> std::vector<std::uint32_t>
{
    std::vector<std::uint32_t> result(_k);
    for (unsigned i = 0 ; i < _k ; ++i) {
        result[i] = a % _p;
        a /= _p;
    }
    return result;
}

auto FiniteField::_from_digits(const std::vector<std::uint32_t> & d) const -> Element
{
    Element result = 0;
    for (unsigned i = 0 ; i < _k ; ++i)
        result += d[i] * _digit_weight[i];
    return result;
}

auto FiniteField::add(Element a, Element b) const -> Element
{
    if (_k == 1)
        return (a + b) % _p;
    Element result = 0;
    for (unsigned i = 0 ; i < _k ; ++i) {
        result += ((a % _p + b % _p) % _p) * _digit_weight[i];
        a /= _p;
        b /= _p;
    }
    return result;
}

auto FiniteField::neg(Element a) const -> Element
{
    if (_k == 1)
        return (_p - a) % _p;
    Element result = 0;
    for (unsigned i = 0 ; i < _k ; ++i) {
        result += ((_p - a % _p) % _p) * _digit_weight[i];
        a /= _p;
    }
    return result;
}

auto FiniteField::sub(Element a, Element b) const -> Element
{
    return add(a, neg(b));
}

auto FiniteField::mul(Element a, Element b) const -> Element
{
    if (_k == 1)
        return static_cast<std::uint64_t>(a) * b % _p;

    auto da = _digits(a), db = _digits(b);
    Poly product(2 * _k - 1, 0);
    for (unsigned i = 0 ; i < _k ; ++i)
        for (unsigned j = 0 ; j < _k ; ++j)
            product[i + j] = (product[i + j] + da[i] * db[j]) % _p;

    Poly m(_modulus);
    m.push_back(1);
    Poly r = poly_mod(product, m, _p);
    r.resize(_k, 0);
    return _from_digits(r);
}

auto FiniteField::pow(Element a, std::uint64_t e) const -> Element
{
    Element result = 1, base = a;
    while (e) {
        if (e & 1)
            result = mul(result, base);
        base = mul(base, base);
        e >>= 1;
    }
    return result;
}

auto FiniteField::inv(Element a) const -> Element
{
    if (a == 0)
        throw InvalidArgument("inverse of zero");
    return pow(a, _q - 2);
}

auto FiniteField::is_square(Element a) const -> bool
{
    return _square[a];
}

auto ramsey::make_field(std::uint32_t p, unsigned k) -> FiniteField
{
    return FiniteField(p, k);
}

auto ramsey::field_of_order(std::uint64_t q) -> FiniteField
{
    auto [p, k] = prime_power(q);
    if (p == 0)
        throw InvalidArgument(std::to_string(q) + " is not a prime power");
    return FiniteField(p, k);
}

auto ramsey::quadratic_residues(const FiniteField & f) -> std::vector<Element>
{
    if (f.characteristic() == 2)
        throw InvalidArgument("quadratic residues need odd characteristic");
    std::vector<Element> result;
    for (Element a = 1 ; a < f.order() ; ++a)
        if (f.is_square(a))
            result.push_back(a);
    return result;
}

auto ramsey::projective_point_count(std::uint64_t q, unsigned dim) -> std::uint64_t
{
    return (ipow(q, dim + 1) - 1) / (q - 1);
}

auto ramsey::normalise(const FiniteField & f, std::vector<Element> v) -> ProjectivePoint
{
    auto lead = std::find_if(v.begin(), v.end(), [] (Element x) { return x != 0; });
    if (lead == v.end())
        throw InvalidArgument("the zero vector is not a projective point");
    Element scale = f.inv(*lead);
    for (auto & x : v)
        x = f.mul(x, scale);
    return ProjectivePoint{ std::move(v) };
}

auto ramsey::dot(const FiniteField & f, const std::vector<Element> & a, const std::vector<Element> & b) -> Element
{
    Element result = 0;
    for (unsigned i = 0 ; i < a.size() ; ++i)
        result = f.add(result, f.mul(a[i], b[i]));
    return result;
}

auto ramsey::projective_points(const FiniteField & f, unsigned dim) -> std::vector<ProjectivePoint>
{
    if (dim != 2 && dim != 3)
        throw InvalidArgument("projective dimension must be 2 or 3");
    const std::uint64_t q = f.order();
    if (projective_point_count(q, dim) > 1000000)
        throw SizeExceeded("PG(" + std::to_string(dim) + "," + std::to_string(q) + ") has more than 10^6 points");

    // Leading 1 at position lead, zeros before it, anything after.
    std::vector<ProjectivePoint> result;
    for (unsigned lead = 0 ; lead <= dim ; ++lead) {
        unsigned free = dim - lead;
        std::uint64_t total = ipow(q, free);
        for (std::uint64_t idx = 0 ; idx < total ; ++idx) {
            std::vector<Element> c(dim + 1, 0);
            c[lead] = 1;
            std::uint64_t rest = idx;
            for (unsigned i = dim ; i > lead ; --i) {
                c[i] = rest % q;
                rest /= q;
            }
            result.push_back(ProjectivePoint{ std::move(c) });
        }
    }
    std::sort(result.begin(), result.end());
    return result;
}
