/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#include <pathforge/simd/bitset_kernels.hh>

#include <cstdlib>
#include <string_view>

namespace pathforge::simd
{
    auto cpu_supports(Isa isa) -> bool
    {
        switch (isa) {
            case Isa::Scalar:
                return true;
            case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
                return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
                return false;
#endif
        }
        return false;
    }

    namespace
    {
        auto select() -> const BitsetKernels &
        {
            if (const char * forced = std::getenv("PATHFORGE_SIMD"); forced && std::string_view{forced} == "scalar")
                return scalar::kernels();
            if (auto table = avx2::kernels(); table && cpu_supports(Isa::Avx2))
                return *table;
            return scalar::kernels();
        }
    }

    auto active() -> const BitsetKernels &
    {
        static const BitsetKernels & chosen = select();
        return chosen;
    }
}
