/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/simd/bitset_kernels.hh>

#include <bit>

namespace pathforge::simd::scalar
{
    namespace
    {
        auto and_into(std::span<Word> dst, std::span<const Word> src) -> void
        {
            for (std::size_t i = 0; i < dst.size(); ++i)
                dst[i] &= src[i];
        }

        auto andnot_into(std::span<Word> dst, std::span<const Word> src) -> void
        {
            for (std::size_t i = 0; i < dst.size(); ++i)
                dst[i] &= ~src[i];
        }

        auto or_into(std::span<Word> dst, std::span<const Word> src) -> void
        {
            for (std::size_t i = 0; i < dst.size(); ++i)
                dst[i] |= src[i];
        }

        auto popcount(std::span<const Word> words) -> std::size_t
        {
            std::size_t result = 0;
            for (auto w : words)
                result += std::popcount(w);
            return result;
        }

        auto and_popcount(std::span<const Word> a, std::span<const Word> b) -> std::size_t
        {
            std::size_t result = 0;
            for (std::size_t i = 0; i < a.size(); ++i)
                result += std::popcount(a[i] & b[i]);
            return result;
        }

        auto any(std::span<const Word> words) -> bool
        {
            for (auto w : words)
                if (w)
                    return true;
            return false;
        }

        const BitsetKernels table{and_into, andnot_into, or_into, popcount, and_popcount, any, "scalar"};
    }

    auto kernels() -> const BitsetKernels &
    {
        return table;
    }
}
