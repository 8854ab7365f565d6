/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <doctest.h>

#include <pathforge/bitset.hh>
#include <pathforge/simd/bitset_kernels.hh>

#include <bit>
#include <random>
#include <vector>

using namespace pathforge;
using pathforge::simd::Word;

namespace
{
    auto random_words(std::mt19937_64 & rng, std::size_t n) -> std::vector<Word>
    {
        std::vector<Word> w(n);
        for (auto & x : w) {
            // mix dense, sparse and empty words
            switch (rng() % 4) {
                case 0: x = 0; break;
                case 1: x = rng() & rng() & rng(); break;
                default: x = rng(); break;
            }
        }
        return w;
    }

    auto reference_popcount(const std::vector<Word> & w) -> std::size_t
    {
        std::size_t n = 0;
        for (auto x : w)
            for (int b = 0; b < 64; ++b)
                n += (x >> b) & 1u;
        return n;
    }

    auto check_table(const simd::BitsetKernels & k) -> void
    {
        std::mt19937_64 rng(7);
        for (std::size_t n = 0; n <= 37; ++n)
            for (int rep = 0; rep < 20; ++rep) {
                auto a = random_words(rng, n), b = random_words(rng, n);

                auto r = a;
                k.and_into(r, b);
                for (std::size_t i = 0; i < n; ++i)
                    REQUIRE(r[i] == (a[i] & b[i]));

                r = a;
                k.or_into(r, b);
                for (std::size_t i = 0; i < n; ++i)
                    REQUIRE(r[i] == (a[i] | b[i]));

                r = a;
                k.andnot_into(r, b);
                for (std::size_t i = 0; i < n; ++i)
                    REQUIRE(r[i] == (a[i] & ~b[i]));

                REQUIRE(k.popcount(a) == reference_popcount(a));
                std::vector<Word> both(n);
                for (std::size_t i = 0; i < n; ++i)
                    both[i] = a[i] & b[i];
                REQUIRE(k.and_popcount(a, b) == reference_popcount(both));
                REQUIRE(k.any(a) == (reference_popcount(a) != 0));
            }
    }
}

TEST_SUITE("simd")
{
    TEST_CASE("scalar kernels match word-by-word reference")
    {
        check_table(simd::scalar::kernels());
    }

    TEST_CASE("avx2 kernels match scalar kernels")
    {
        auto avx = simd::avx2::kernels();
        if (! avx || ! simd::cpu_supports(simd::Isa::Avx2)) {
            MESSAGE("avx2 kernels unavailable here, skipped");
            return;
        }
        check_table(*avx);

        std::mt19937_64 rng(11);
        auto & s = simd::scalar::kernels();
        for (std::size_t n : {1u, 3u, 4u, 5u, 8u, 63u, 64u, 65u, 257u}) {
            auto a = random_words(rng, n), b = random_words(rng, n);
            auto r1 = a, r2 = a;
            s.andnot_into(r1, b);
            avx->andnot_into(r2, b);
            CHECK(r1 == r2);
            CHECK(s.and_popcount(a, b) == avx->and_popcount(a, b));
            CHECK(s.popcount(b) == avx->popcount(b));
        }
    }

    TEST_CASE("active table is one of the two")
    {
        auto name = simd::active().name;
        CHECK((name == simd::scalar::kernels().name || (simd::avx2::kernels() && name == simd::avx2::kernels()->name)));
    }

    TEST_CASE("bitset operations")
    {
        Bitset a(130), b(130, true);
        CHECK(a.none());
        CHECK(b.count() == 130);
        a.set(0);
        a.set(64);
        a.set(129);
        CHECK(a.count() == 3);
        CHECK(a.find_first() == 0);
        CHECK(a.find_next(1) == 64);
        CHECK(a.find_next(65) == 129);
        CHECK(a.find_next(130) == 130);
        CHECK(a.intersection_count(b) == 3);
        b.and_not(a);
        CHECK(b.count() == 127);
        CHECK(! b.test(64));
        b |= a;
        CHECK(b.count() == 130);
        b &= a;
        CHECK(b == a);
        a.reset(64);
        CHECK(a.count() == 2);
    }
}
