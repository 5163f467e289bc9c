#ifndef CONFSEL_CI_ORACLE_HPP
#define CONFSEL_CI_ORACLE_HPP

#include <atomic>
#include <cstdint>
#include <string>

#include "confsel/dag.hpp"

namespace confsel {

/// A yes/no conditional-independence answerer bound to one treatment/outcome
/// problem. `query` returns true when xs and ys are independent given
/// `given`. Answers are deterministic for fixed inputs and symmetric in
/// xs/ys; an empty xs or ys is independent of anything by convention.
/// Implementations must tolerate concurrent queries; the call counter is
/// atomic bookkeeping only.
class CiOracle {
public:
    virtual ~CiOracle() = default;

    CiOracle(const CiOracle&) = delete;
    CiOracle& operator=(const CiOracle&) = delete;

    bool query(const VertexSet& xs, const VertexSet& ys, const VertexSet& given) const {
        calls_.fetch_add(1, std::memory_order_relaxed);
        if (xs.empty() || ys.empty()) return true;
        return query_impl(xs, ys, given);
    }

    const std::string& treatment() const { return treatment_; }
    const std::string& outcome() const { return outcome_; }

    std::uint64_t calls() const { return calls_.load(std::memory_order_relaxed); }
    void reset_calls() const { calls_.store(0, std::memory_order_relaxed); }

protected:
    CiOracle(std::string treatment, std::string outcome)
        : treatment_(std::move(treatment)), outcome_(std::move(outcome)) {}

    virtual bool query_impl(const VertexSet& xs, const VertexSet& ys,
                            const VertexSet& given) const = 0;

private:
    std::string treatment_;
    std::string outcome_;
    mutable std::atomic<std::uint64_t> calls_{0};
};

/// Answers queries by d-separation in the graph. Exact for distributions
/// Markov and faithful to it.
class DsepOracle final : public CiOracle {
public:
    explicit DsepOracle(Dag g);

    const Dag& graph() const { return graph_; }

protected:
    bool query_impl(const VertexSet& xs, const VertexSet& ys,
                    const VertexSet& given) const override;

private:
    Dag graph_;
};

}  // namespace confsel

#endif
