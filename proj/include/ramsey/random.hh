/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_RANDOM_HH
#define RAMSEY_RANDOM_HH 1

#include <cstdint>
#include <limits>

namespace ramsey
{
    /// xoshiro256** with its state expanded from a single 64-bit seed by
    /// splitmix64. The bit stream is part of the certificate format: block
    /// partitions and sampled vertex sets are reproduced from the seed alone.
    class Xoshiro256
    {
        public:
            using result_type = std::uint64_t;

            explicit Xoshiro256(std::uint64_t seed)
            {
                for (auto & s : _state) {
                    seed += 0x9e3779b97f4a7c15ULL;
                    std::uint64_t z = seed;
                    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
                    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
                    s = z ^ (z >> 31);
                }
            }

            static constexpr auto min() -> result_type
            {
                return 0;
            }

            static constexpr auto max() -> result_type
            {
                return std::numeric_limits<result_type>::max();
            }

            auto operator() () -> result_type
            {
                const std::uint64_t result = _rotl(_state[1] * 5, 7) * 9;
                const std::uint64_t t = _state[1] << 17;
                _state[2] ^= _state[0];
                _state[3] ^= _state[1];
                _state[1] ^= _state[2];
                _state[0] ^= _state[3];
                _state[2] ^= t;
                _state[3] = _rotl(_state[3], 45);
                return result;
            }

            /// One fair bit: the top bit of the next output.
            auto bit() -> bool
            {
                return (*this)() >> 63;
            }

            /// Uniform double in [0, 1) from the top 53 bits.
            auto uniform() -> double
            {
                return ((*this)() >> 11) * 0x1.0p-53;
            }

            /// Uniform integer in [0, bound) by rejection.
            auto below(std::uint64_t bound) -> std::uint64_t
            {
                const std::uint64_t limit = max() - max() % bound;
                while (true) {
                    std::uint64_t x = (*this)();
                    if (x < limit)
                        return x % bound;
                }
            }

        private:
            std::uint64_t _state[4];

            static auto _rotl(std::uint64_t x, int k) -> std::uint64_t
            {
                return (x << k) | (x >> (64 - k));
            }
    };
}

#endif
