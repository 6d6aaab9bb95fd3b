#pragma once

#include <memory>
#include <string>

#include "satjac/errors.hpp"

namespace satjac {

/// Only graded reverse lexicographic is implemented; the enum exists so the
/// order is an explicit part of the ring rather than an implicit convention.
enum class MonomialOrder { grevlex };

/// The ambient graded ring Q[x0,...,xn]: just a variable count and an order.
class RingContext {
public:
    explicit RingContext(int num_vars, MonomialOrder order = MonomialOrder::grevlex)
        : num_vars_(num_vars), order_(order) {
        if (num_vars < 2) throw InvalidArgumentError("ring needs at least 2 variables");
    }

    int num_vars() const { return num_vars_; }
    /// Projective dimension: the ring is the coordinate ring of P^n.
    int n() const { return num_vars_ - 1; }
    MonomialOrder order() const { return order_; }

    std::string var_name(int i) const { return "x" + std::to_string(i); }

    friend bool operator==(const RingContext& a, const RingContext& b) {
        return a.num_vars_ == b.num_vars_ && a.order_ == b.order_;
    }

private:
    int num_vars_;
    MonomialOrder order_;
};

using RingPtr = std::shared_ptr<const RingContext>;

inline RingPtr make_ring(int num_vars) { return std::make_shared<RingContext>(num_vars); }

inline void require_same_ring(const RingPtr& a, const RingPtr& b) {
    if (!a || !b || !(*a == *b)) throw RingMismatchError("operands live in different rings");
}

}  // namespace satjac
