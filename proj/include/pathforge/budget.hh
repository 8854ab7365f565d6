/* vim: set sw=4 sts=4 et foldmethod=syntax : */

#ifndef PATHFORGE_BUDGET_HH
#define PATHFORGE_BUDGET_HH 1

#include <cstdint>
#include <limits>

namespace pathforge
{
    // Step budget for long searches. A search that runs out reports
    // SearchStatus::Exhausted instead of claiming a negative answer.
    class Budget
    {
        private:
            std::uint64_t _limit;
            std::uint64_t _used = 0;

        public:
            explicit Budget(std::uint64_t limit = std::numeric_limits<std::uint64_t>::max()) :
                _limit(limit)
            {
            }

            static auto unlimited() -> Budget { return Budget{}; }

            // Consumes steps; false once the limit has been passed.
            auto spend(std::uint64_t steps = 1) -> bool
            {
                _used += steps;
                return _used <= _limit;
            }

            auto exhausted() const -> bool { return _used > _limit; }
            auto used() const -> std::uint64_t { return _used; }
            auto limit() const -> std::uint64_t { return _limit; }
    };

    enum class SearchStatus
    {
        Found,
        None,
        Exhausted
    };

    template <typename T_>
    struct SearchResult
    {
        SearchStatus status = SearchStatus::None;
        T_ value{};

        auto found() const -> bool { return status == SearchStatus::Found; }
    };
}

#endif
