#pragma once

// Finitely generated commutative monoids with exponent-domain constraints and
// single square-relations, and their elements.
//
// A signature declares:
//   * plain axes: named variables with an exponent domain (NonNeg or Integer)
//     and an optional half flag.  Exponents of half axes are stored doubled, so
//     stored k means the power k/2; printing uses ^(k/2) for odd k.
//   * prime axes: a variable family indexed by primes, holding a positive
//     integer (or, if `rational`, positive rational) as a sparse factorization.
//     Exponents are per-prime; a non-rational prime axis requires them > 0.
//   * quotient rules: relations of the form t^2 = l * r between plain axes.
//     Canonical form keeps the exponent of t below 2 by moving pairs across.
//
// Elements are exponent vectors aligned with their signature.  They do not
// carry a signature pointer themselves; polynomials do, and free functions here
// take the signature explicitly.

#include <algorithm>
#include <cstdint>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"

namespace tutte {

enum class AxisDomain { NonNeg, Integer };

struct Axis {
    std::string name;
    AxisDomain domain = AxisDomain::NonNeg;
    bool half = false;  // exponents stored doubled
};

struct PrimeAxis {
    std::string name;
    bool rational = false;  // allow negative per-prime exponents
};

// target^2 -> left * right (axis indices)
struct QuotientRule {
    int target = 0;
    int left = 0;
    int right = 0;
};

struct MonoidSig;
using SigPtr = std::shared_ptr<const MonoidSig>;

struct MonoidSig {
    std::vector<Axis> axes;
    std::vector<PrimeAxis> prime_axes;
    std::vector<QuotientRule> rules;

    int axis_index(const std::string& name) const {
        for (int i = 0; i < (int)axes.size(); ++i)
            if (axes[i].name == name) return i;
        throw SignatureError("no axis named '" + name + "'");
    }

    bool same_shape(const MonoidSig& o) const {
        if (axes.size() != o.axes.size() || prime_axes.size() != o.prime_axes.size() ||
            rules.size() != o.rules.size())
            return false;
        for (size_t i = 0; i < axes.size(); ++i)
            if (axes[i].name != o.axes[i].name || axes[i].domain != o.axes[i].domain ||
                axes[i].half != o.axes[i].half)
                return false;
        for (size_t i = 0; i < prime_axes.size(); ++i)
            if (prime_axes[i].name != o.prime_axes[i].name ||
                prime_axes[i].rational != o.prime_axes[i].rational)
                return false;
        for (size_t i = 0; i < rules.size(); ++i)
            if (rules[i].target != o.rules[i].target || rules[i].left != o.rules[i].left ||
                rules[i].right != o.rules[i].right)
                return false;
        return true;
    }
};

// Builder shorthand used all over the structure modules.
class SigBuilder {
public:
    SigBuilder& axis(std::string name, AxisDomain d = AxisDomain::NonNeg, bool half = false) {
        sig_.axes.push_back({std::move(name), d, half});
        return *this;
    }
    SigBuilder& half_axis(std::string name, AxisDomain d = AxisDomain::NonNeg) {
        return axis(std::move(name), d, true);
    }
    SigBuilder& prime_axis(std::string name, bool rational = false) {
        sig_.prime_axes.push_back({std::move(name), rational});
        return *this;
    }
    SigBuilder& rule(const std::string& target, const std::string& left,
                     const std::string& right) {
        sig_.rules.push_back({sig_.axis_index(target), sig_.axis_index(left),
                              sig_.axis_index(right)});
        return *this;
    }
    SigPtr build() { return std::make_shared<MonoidSig>(std::move(sig_)); }

private:
    MonoidSig sig_;
};

// Sparse positive-rational factorization: sorted (prime, exponent) pairs with
// nonzero exponents.
using Factorization = std::vector<std::pair<long long, long long>>;

inline Factorization factorization_mul(const Factorization& a, const Factorization& b,
                                       long long b_scale = 1) {
    Factorization out;
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].first < a[i].first) {
            long long e = b[j].second * b_scale;
            if (e != 0) out.push_back({b[j].first, e});
            ++j;
        } else {
            long long e = a[i].second + b[j].second * b_scale;
            if (e != 0) out.push_back({a[i].first, e});
            ++i, ++j;
        }
    }
    return out;
}

struct MonoidElem {
    std::vector<long long> exps;          // plain axes, aligned with sig.axes
    std::vector<Factorization> primes;    // aligned with sig.prime_axes

    friend bool operator==(const MonoidElem& a, const MonoidElem& b) {
        return a.exps == b.exps && a.primes == b.primes;
    }
    friend bool operator!=(const MonoidElem& a, const MonoidElem& b) { return !(a == b); }
};

inline MonoidElem unit_elem(const MonoidSig& sig) {
    MonoidElem e;
    e.exps.assign(sig.axes.size(), 0);
    e.primes.resize(sig.prime_axes.size());
    return e;
}

// Reduce modulo quotient rules and check exponent domains.  Throws DomainError
// if a NonNeg axis ends negative or a non-rational prime axis holds a negative
// exponent.  Rule reduction iterates to a fixed point (rules may chain).
inline void canonicalize(const MonoidSig& sig, MonoidElem& e) {
    if (e.exps.size() != sig.axes.size() || e.primes.size() != sig.prime_axes.size())
        throw SignatureError("element shape does not match signature");
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& r : sig.rules) {
            long long k = e.exps[r.target] / 2;
            if (e.exps[r.target] >= 2) {
                e.exps[r.target] -= 2 * k;
                e.exps[r.left] += k;
                e.exps[r.right] += k;
                changed = true;
            }
        }
    }
    for (size_t i = 0; i < sig.axes.size(); ++i)
        if (sig.axes[i].domain == AxisDomain::NonNeg && e.exps[i] < 0)
            throw DomainError("negative exponent on axis '" + sig.axes[i].name + "'");
    for (size_t i = 0; i < sig.prime_axes.size(); ++i)
        if (!sig.prime_axes[i].rational)
            for (auto& [p, k] : e.primes[i])
                if (k < 0)
                    throw DomainError("negative exponent of prime " + std::to_string(p) +
                                      " on axis '" + sig.prime_axes[i].name + "'");
}

inline MonoidElem elem_mul(const MonoidSig& sig, const MonoidElem& a, const MonoidElem& b) {
    MonoidElem out;
    out.exps.resize(a.exps.size());
    for (size_t i = 0; i < a.exps.size(); ++i) out.exps[i] = a.exps[i] + b.exps[i];
    out.primes.resize(a.primes.size());
    for (size_t i = 0; i < a.primes.size(); ++i)
        out.primes[i] = factorization_mul(a.primes[i], b.primes[i]);
    canonicalize(sig, out);
    return out;
}

inline long long elem_grade(const MonoidElem& e) {
    long long g = 0;
    for (long long x : e.exps) g += x;
    for (const auto& f : e.primes)
        for (auto& [p, k] : f) g += k;
    return g;
}

// Term order used both for the polynomial map and for printing: graded
// lexicographic, larger terms first (higher grade, then lexicographically
// larger exponent vector over the axis order, then prime axes).
struct TermOrder {
    bool operator()(const MonoidElem& a, const MonoidElem& b) const {
        long long ga = elem_grade(a), gb = elem_grade(b);
        if (ga != gb) return ga > gb;
        if (a.exps != b.exps) return a.exps > b.exps;
        return a.primes > b.primes;
    }
};

}  // namespace tutte
