/* vim: set sw=4 sts=4 et foldmethod=syntax : */

// Compiled with -mavx2 when the compiler accepts it. Nothing in here may be
// called unless cpu_supports(Isa::Avx2) holds.

#include <pathforge/simd/bitset_kernels.hh>

#if defined(PATHFORGE_BUILD_AVX2) && defined(__AVX2__)

#include <immintrin.h>

#include <bit>

namespace pathforge::simd::avx2
{
    namespace
    {
        constexpr std::size_t lanes = 4;

        auto load(const Word * p) -> __m256i
        {
            return _mm256_loadu_si256(reinterpret_cast<const __m256i *>(p));
        }

        auto store(Word * p, __m256i v) -> void
        {
            _mm256_storeu_si256(reinterpret_cast<__m256i *>(p), v);
        }

        auto and_into(std::span<Word> dst, std::span<const Word> src) -> void
        {
            const std::size_t n = dst.size(), body = n / lanes * lanes;
            std::size_t i = 0;
            for (; i < body; i += lanes)
                store(dst.data() + i, _mm256_and_si256(load(dst.data() + i), load(src.data() + i)));
            for (; i < n; ++i)
                dst[i] &= src[i];
        }

        auto andnot_into(std::span<Word> dst, std::span<const Word> src) -> void
        {
            const std::size_t n = dst.size(), body = n / lanes * lanes;
            std::size_t i = 0;
            // _mm256_andnot_si256(a, b) computes ~a & b
            for (; i < body; i += lanes)
                store(dst.data() + i, _mm256_andnot_si256(load(src.data() + i), load(dst.data() + i)));
            for (; i < n; ++i)
                dst[i] &= ~src[i];
        }

        auto or_into(std::span<Word> dst, std::span<const Word> src) -> void
        {
            const std::size_t n = dst.size(), body = n / lanes * lanes;
            std::size_t i = 0;
            for (; i < body; i += lanes)
                store(dst.data() + i, _mm256_or_si256(load(dst.data() + i), load(src.data() + i)));
            for (; i < n; ++i)
                dst[i] |= src[i];
        }

        // Nibble-lookup popcount (Mula), accumulated with sad_epu8.
        auto popcount_vec(__m256i v) -> __m256i
        {
            const __m256i lookup = _mm256_setr_epi8(
                0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
            const __m256i low_mask = _mm256_set1_epi8(0x0f);
            __m256i lo = _mm256_and_si256(v, low_mask);
            __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low_mask);
            __m256i counts = _mm256_add_epi8(_mm256_shuffle_epi8(lookup, lo), _mm256_shuffle_epi8(lookup, hi));
            return _mm256_sad_epu8(counts, _mm256_setzero_si256());
        }

        auto horizontal_sum(__m256i v) -> std::size_t
        {
            alignas(32) Word parts[lanes];
            _mm256_store_si256(reinterpret_cast<__m256i *>(parts), v);
            return parts[0] + parts[1] + parts[2] + parts[3];
        }

        auto popcount(std::span<const Word> words) -> std::size_t
        {
            const std::size_t n = words.size(), body = n / lanes * lanes;
            __m256i acc = _mm256_setzero_si256();
            std::size_t i = 0;
            for (; i < body; i += lanes)
                acc = _mm256_add_epi64(acc, popcount_vec(load(words.data() + i)));
            std::size_t result = horizontal_sum(acc);
            for (; i < n; ++i)
                result += std::popcount(words[i]);
            return result;
        }

        auto and_popcount(std::span<const Word> a, std::span<const Word> b) -> std::size_t
        {
            const std::size_t n = a.size(), body = n / lanes * lanes;
            __m256i acc = _mm256_setzero_si256();
            std::size_t i = 0;
            for (; i < body; i += lanes)
                acc = _mm256_add_epi64(acc, popcount_vec(_mm256_and_si256(load(a.data() + i), load(b.data() + i))));
            std::size_t result = horizontal_sum(acc);
            for (; i < n; ++i)
                result += std::popcount(a[i] & b[i]);
            return result;
        }

        auto any(std::span<const Word> words) -> bool
        {
            const std::size_t n = words.size(), body = n / lanes * lanes;
            std::size_t i = 0;
            for (; i < body; i += lanes) {
                __m256i v = load(words.data() + i);
                if (! _mm256_testz_si256(v, v))
                    return true;
            }
            for (; i < n; ++i)
                if (words[i])
                    return true;
            return false;
        }

        const BitsetKernels table{and_into, andnot_into, or_into, popcount, and_popcount, any, "avx2"};
    }

    auto kernels() -> const BitsetKernels *
    {
        return &table;
    }
}

#else

namespace pathforge::simd::avx2
{
    auto kernels() -> const BitsetKernels *
    {
        return nullptr;
    }
}

#endif
