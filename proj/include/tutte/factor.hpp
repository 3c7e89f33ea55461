#pragma once

// Integer factorization into the sparse prime-exponent form used by prime
// axes.  Trial division only: the integers factored here are multiplicities of
// small group presentations, far below anything that needs a serious
// factorizer.

#include "coeff.hpp"
#include "errors.hpp"
#include "monoid.hpp"

namespace tutte {

inline Factorization factorize(BigInt n) {
    if (n <= 0) throw DomainError("factorize expects a positive integer");
    Factorization out;
    auto push = [&](long long p, long long k) {
        if (k > 0) out.push_back({p, k});
    };
    long long k2 = 0;
    while (n % 2 == 0) n /= 2, ++k2;
    push(2, k2);
    for (BigInt p = 3; p * p <= n; p += 2) {
        if (n % p != 0) continue;
        long long k = 0;
        while (n % p == 0) n /= p, ++k;
        push((long long)p, k);
    }
    if (n > 1) push((long long)n, 1);
    return out;
}

// n = a/b as a rational prime-support vector (used by inverse norms such as
// a |-> (1/a) v).
inline Factorization factorize_ratio(const BigInt& num, const BigInt& den) {
    return factorization_mul(factorize(num), factorize(den), -1);
}

}  // namespace tutte
