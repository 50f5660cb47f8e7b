#pragma once

#include <cstdint>
#include <vector>

namespace proofmesh {

// Field-operation tallies. Inversions are counted separately from the
// multiplications they may perform internally.
struct OpCounts {
    std::uint64_t mul = 0;
    std::uint64_t add = 0;
    std::uint64_t inv = 0;

    OpCounts& operator+=(const OpCounts& o) {
        mul += o.mul;
        add += o.add;
        inv += o.inv;
        return *this;
    }
};

// Per-run accumulator with per-party attribution. Party 0 is the prover,
// parties 1..N are servers. Each run owns its counter; nothing is shared
// across concurrent runs.
class OpCounter {
  public:
    static constexpr std::uint32_t kProver = 0;

    explicit OpCounter(std::uint32_t num_servers = 0) : by_party_(num_servers + 1) {}

    OpCounts& party(std::uint32_t index) {
        if (index >= by_party_.size()) by_party_.resize(index + 1);
        return by_party_[index];
    }

    const std::vector<OpCounts>& parties() const { return by_party_; }

    OpCounts total() const {
        OpCounts t;
        for (const auto& c : by_party_) t += c;
        return t;
    }

  private:
    std::vector<OpCounts> by_party_;
};

namespace detail {

struct OpSink {
    OpCounter* counter = nullptr;
    std::uint32_t party = OpCounter::kProver;
};

inline thread_local OpSink g_op_sink;

inline void tick_mul() {
    if (g_op_sink.counter) g_op_sink.counter->party(g_op_sink.party).mul++;
}

inline void tick_add() {
    if (g_op_sink.counter) g_op_sink.counter->party(g_op_sink.party).add++;
}

inline void tick_inv() {
    if (g_op_sink.counter) g_op_sink.counter->party(g_op_sink.party).inv++;
}

}  // namespace detail

// Routes field-operation ticks on this thread into `counter` for its lifetime.
class ScopedCounting {
  public:
    explicit ScopedCounting(OpCounter& counter) : saved_(detail::g_op_sink) {
        detail::g_op_sink = {&counter, OpCounter::kProver};
    }
    ~ScopedCounting() { detail::g_op_sink = saved_; }
    ScopedCounting(const ScopedCounting&) = delete;
    ScopedCounting& operator=(const ScopedCounting&) = delete;

  private:
    detail::OpSink saved_;
};

// Switches the attributed party while in scope (counter unchanged).
class ScopedParty {
  public:
    explicit ScopedParty(std::uint32_t party) : saved_(detail::g_op_sink.party) {
        detail::g_op_sink.party = party;
    }
    ~ScopedParty() { detail::g_op_sink.party = saved_; }
    ScopedParty(const ScopedParty&) = delete;
    ScopedParty& operator=(const ScopedParty&) = delete;

  private:
    std::uint32_t saved_;
};

}  // namespace proofmesh
