#pragma once

#include <cstdint>

// Lightweight per-thread operation counters. Counting is off unless a
// CountingScope is alive on the current thread; the arithmetic itself is
// unchanged either way, so counted and uncounted runs produce identical
// bytes.

namespace aesmix::ops {

struct OpCounts {
    std::uint64_t gf_mul = 0;
    std::uint64_t xtime = 0;
    std::uint64_t table_lookup = 0;
};

namespace detail {
inline thread_local OpCounts* t_sink = nullptr;
}

inline void note_gf_mul() {
    if (auto* s = detail::t_sink) ++s->gf_mul;
}

inline void note_xtime() {
    if (auto* s = detail::t_sink) ++s->xtime;
}

inline void note_table_lookup() {
    if (auto* s = detail::t_sink) ++s->table_lookup;
}

// RAII: redirects this thread's counters into a local tally for the scope's
// lifetime. Scopes nest; the inner scope shadows the outer one.
class CountingScope {
public:
    CountingScope() : prev_(detail::t_sink) { detail::t_sink = &counts_; }
    ~CountingScope() { detail::t_sink = prev_; }

    CountingScope(const CountingScope&) = delete;
    CountingScope& operator=(const CountingScope&) = delete;

    const OpCounts& counts() const { return counts_; }

private:
    OpCounts counts_{};
    OpCounts* prev_;
};

}  // namespace aesmix::ops
