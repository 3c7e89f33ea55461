#pragma once

// The simplest minors system: finite sets.  A structure is determined by its
// cardinality alone; restriction and contraction just count.  Useful as a
// sanity anchor: every Tutte character of a set is tau * (u1 + u2)^n.

#include <bit>
#include <cstdint>
#include <string>

#include "minors.hpp"

namespace tutte {

struct SetSystem {
    struct Value {
        int n = 0;
    };

    static int size(const Value& v) { return v.n; }
    static Value restrict_to(const Value&, uint32_t a) {
        return Value{std::popcount(a)};
    }
    static Value contract_out(const Value& v, uint32_t a) {
        return Value{v.n - std::popcount(a)};
    }
    static std::string key(const Value& v) { return "set:" + std::to_string(v.n); }
};

// The norm sending every one-element set to the monomial `m` (norms on sets
// are exactly m^{|E|}).
inline ValueFn<SetSystem> set_norm(const SigPtr& sig, const Poly& m) {
    return [sig, m](const SetSystem::Value& v) { return m.pow(v.n); };
}

}  // namespace tutte
