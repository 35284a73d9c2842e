/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef RAMSEY_BITSET_HH
#define RAMSEY_BITSET_HH 1

#include <bit>
#include <cstdint>
#include <vector>

namespace ramsey
{
    /// Dynamically sized bit set backed by 64-bit words. Used for adjacency
    /// rows, so the set operations here are the inner loops of most searches.
    class Bitset
    {
        public:
            using Word = std::uint64_t;
            static constexpr unsigned bits_per_word = 64;

            Bitset() = default;

            explicit Bitset(unsigned size) :
                _size(size),
                _words((size + bits_per_word - 1) / bits_per_word, 0)
            {
            }

            auto size() const -> unsigned
            {
                return _size;
            }

            auto word_count() const -> unsigned
            {
                return _words.size();
            }

            auto words() const -> const std::vector<Word> &
            {
                return _words;
            }

            auto test(unsigned i) const -> bool
            {
                return (_words[i / bits_per_word] >> (i % bits_per_word)) & 1;
            }

            auto set(unsigned i) -> void
            {
                _words[i / bits_per_word] |= Word{1} << (i % bits_per_word);
            }

            auto reset(unsigned i) -> void
            {
                _words[i / bits_per_word] &= ~(Word{1} << (i % bits_per_word));
            }

            auto set_all() -> void
            {
                for (auto & w : _words)
                    w = ~Word{0};
                _trim();
            }

            auto clear() -> void
            {
                for (auto & w : _words)
                    w = 0;
            }

            auto count() const -> unsigned
            {
                unsigned result = 0;
                for (auto w : _words)
                    result += std::popcount(w);
                return result;
            }

            auto empty() const -> bool
            {
                for (auto w : _words)
                    if (w)
                        return false;
                return true;
            }

            /// Index of the lowest set bit, or size() if none.
            auto first() const -> unsigned
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    if (_words[i])
                        return i * bits_per_word + std::countr_zero(_words[i]);
                return _size;
            }

            /// Index of the lowest set bit strictly after i, or size() if none.
            auto next(unsigned i) const -> unsigned
            {
                ++i;
                if (i >= _size)
                    return _size;
                unsigned wi = i / bits_per_word;
                Word w = _words[wi] & (~Word{0} << (i % bits_per_word));
                while (true) {
                    if (w)
                        return wi * bits_per_word + std::countr_zero(w);
                    if (++wi == _words.size())
                        return _size;
                    w = _words[wi];
                }
            }

            auto intersect_with(const Bitset & other) -> void
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= other._words[i];
            }

            auto union_with(const Bitset & other) -> void
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    _words[i] |= other._words[i];
            }

            auto subtract(const Bitset & other) -> void
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    _words[i] &= ~other._words[i];
            }

            auto intersection_count(const Bitset & other) const -> unsigned
            {
                unsigned result = 0;
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    result += std::popcount(_words[i] & other._words[i]);
                return result;
            }

            auto intersects(const Bitset & other) const -> bool
            {
                for (unsigned i = 0 ; i < _words.size() ; ++i)
                    if (_words[i] & other._words[i])
                        return true;
                return false;
            }

            auto to_vector() const -> std::vector<unsigned>
            {
                std::vector<unsigned> result;
                for (unsigned i = first() ; i < _size ; i = next(i))
                    result.push_back(i);
                return result;
            }

            friend auto operator== (const Bitset &, const Bitset &) -> bool = default;

        private:
            unsigned _size = 0;
            std::vector<Word> _words;

            auto _trim() -> void
            {
                if (_size % bits_per_word && ! _words.empty())
                    _words.back() &= (Word{1} << (_size % bits_per_word)) - 1;
            }
    };
}

#endif
