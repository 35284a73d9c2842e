/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <ramsey/hash.hh>
#include <ramsey/errors.hh>

#include <cstdio>

using namespace ramsey;

auto ramsey::fnv1a64(std::string_view bytes) -> std::uint64_t
{
    return Fnv1a64().update(bytes).value();
}

auto ramsey::hash_to_hex(std::uint64_t h) -> std::string
{
    char buffer[17];
    std::snprintf(buffer, sizeof(buffer), "%016llx", static_cast<unsigned long long>(h));
    return buffer;
}

auto ramsey::hash_from_hex(std::string_view text) -> std::uint64_t
{
    if (text.size() != 16)
        throw InvalidArgument("hash must be 16 hex digits");
    std::uint64_t result = 0;
    for (char c : text) {
        result <<= 4;
        if (c >= '0' && c <= '9')
            result |= c - '0';
        else if (c >= 'a' && c <= 'f')
            result |= c - 'a' + 10;
        else
            throw InvalidArgument("hash must be lowercase hex");
    }
    return result;
}
