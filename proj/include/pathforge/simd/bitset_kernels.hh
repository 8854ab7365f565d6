/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_SIMD_BITSET_KERNELS_HH
#define PATHFORGE_SIMD_BITSET_KERNELS_HH 1

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace pathforge::simd
{
    using Word = std::uint64_t;

    // Word-array kernels used by the bitset domains of the backtracking
    // searches. Every kernel has a scalar reference and, where the build and
    // the CPU allow it, an AVX2 variant. Destination and source spans must
    // have equal length.
    struct BitsetKernels
    {
        void (*and_into)(std::span<Word> dst, std::span<const Word> src);
        void (*andnot_into)(std::span<Word> dst, std::span<const Word> src);
        void (*or_into)(std::span<Word> dst, std::span<const Word> src);
        std::size_t (*popcount)(std::span<const Word> words);
        std::size_t (*and_popcount)(std::span<const Word> a, std::span<const Word> b);
        bool (*any)(std::span<const Word> words);
        std::string_view name;
    };

    namespace scalar
    {
        auto kernels() -> const BitsetKernels &;
    }

    namespace avx2
    {
        // Null when the library was built without AVX2 support.
        auto kernels() -> const BitsetKernels *;
    }

    enum class Isa
    {
        Scalar,
        Avx2
    };

    auto cpu_supports(Isa isa) -> bool;

    // The kernel table selected at first use: AVX2 when both the build and
    // the running CPU support it, scalar otherwise. PATHFORGE_SIMD=scalar in
    // the environment forces the scalar table.
    auto active() -> const BitsetKernels &;
}

#endif
