/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_HASH_HH
#define RAMSEY_HASH_HH 1

#include <cstdint>
#include <string>
#include <string_view>

namespace ramsey
{
    class Fnv1a64
    {
        public:
            static constexpr std::uint64_t offset_basis = 0xcbf29ce484222325ULL;
            static constexpr std::uint64_t prime = 0x100000001b3ULL;

            auto update(std::string_view bytes) -> Fnv1a64 &
            {
                for (unsigned char c : bytes) {
                    _value ^= c;
                    _value *= prime;
                }
                return *this;
            }

            auto value() const -> std::uint64_t
            {
                return _value;
            }

        private:
            std::uint64_t _value = offset_basis;
    };

    auto fnv1a64(std::string_view bytes) -> std::uint64_t;

    /// 16 lowercase hex digits.
    auto hash_to_hex(std::uint64_t) -> std::string;

    auto hash_from_hex(std::string_view) -> std::uint64_t;
}

#endif
