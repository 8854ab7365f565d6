/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_BITSET_HH
#define PATHFORGE_BITSET_HH 1

#include <pathforge/simd/bitset_kernels.hh>

#include <bit>
#include <cstddef>
#include <vector>

namespace pathforge
{
    // Fixed-size dynamic bitset over dense indices. Bulk operations go
    // through the runtime-selected SIMD kernels.
    class Bitset
    {
        private:
            std::vector<simd::Word> _words;
            std::size_t _size = 0;

        public:
            Bitset() = default;

            explicit Bitset(std::size_t size, bool filled = false) :
                _words((size + 63) / 64, filled ? ~simd::Word{0} : simd::Word{0}),
                _size(size)
            {
                if (filled && size % 64 != 0)
                    _words.back() &= (simd::Word{1} << (size % 64)) - 1;
            }

            auto size() const -> std::size_t { return _size; }

            auto test(std::size_t i) const -> bool { return (_words[i / 64] >> (i % 64)) & 1u; }
            auto set(std::size_t i) -> void { _words[i / 64] |= simd::Word{1} << (i % 64); }
            auto reset(std::size_t i) -> void { _words[i / 64] &= ~(simd::Word{1} << (i % 64)); }

            auto operator&=(const Bitset & other) -> Bitset &
            {
                simd::active().and_into(_words, other._words);
                return *this;
            }

            auto operator|=(const Bitset & other) -> Bitset &
            {
                simd::active().or_into(_words, other._words);
                return *this;
            }

            auto and_not(const Bitset & other) -> Bitset &
            {
                simd::active().andnot_into(_words, other._words);
                return *this;
            }

            auto count() const -> std::size_t { return simd::active().popcount(_words); }
            auto intersection_count(const Bitset & other) const -> std::size_t
            {
                return simd::active().and_popcount(_words, other._words);
            }
            auto any() const -> bool { return simd::active().any(_words); }
            auto none() const -> bool { return ! any(); }

            // Index of the first set bit at or after from, or size() if none.
            auto find_next(std::size_t from) const -> std::size_t
            {
                if (from >= _size)
                    return _size;
                std::size_t w = from / 64;
                simd::Word bits = _words[w] & (~simd::Word{0} << (from % 64));
                while (true) {
                    if (bits)
                        return w * 64 + std::countr_zero(bits);
                    if (++w == _words.size())
                        return _size;
                    bits = _words[w];
                }
            }

            auto find_first() const -> std::size_t { return find_next(0); }

            auto operator==(const Bitset &) const -> bool = default;
    };
}

#endif
