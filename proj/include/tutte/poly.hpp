#pragma once

// Sparse multivariate polynomials over exact Gaussian-rational coefficients,
// with monomials in a quotiented exponent monoid (see monoid.hpp).
//
// Terms are kept canonicalized and ordered by TermOrder, so printing is
// deterministic and equality is term-by-term map equality.

#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "coeff.hpp"
#include "errors.hpp"
#include "monoid.hpp"

namespace tutte {

class Poly;

// How to substitute axes of a source signature when mapping into a target
// signature.  For a half axis the assigned value is the value of the *half
// power* (the generator unit), so a stored exponent k always contributes
// value^k.  Axes without an explicit assignment pass through by name when the
// target has a matching axis; otherwise touching them is an error.
struct Specialization {
    SigPtr target;
    std::map<int, Poly> axis_values;  // source plain-axis index -> value
    // source prime-axis index -> value of the variable attached to prime p
    std::map<int, std::function<Poly(long long)>> prime_values;
};

class Poly {
public:
    Poly() = default;
    explicit Poly(SigPtr sig) : sig_(std::move(sig)) {}

    static Poly zero(SigPtr sig) { return Poly(std::move(sig)); }

    static Poly constant(SigPtr sig, Coeff c) {
        Poly p(std::move(sig));
        if (!c.is_zero()) p.terms_.emplace(unit_elem(*p.sig_), std::move(c));
        return p;
    }

    static Poly monomial(SigPtr sig, MonoidElem e, Coeff c = Coeff(1)) {
        Poly p(std::move(sig));
        canonicalize(*p.sig_, e);
        if (!c.is_zero()) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    // x_axis^1 (for a half axis: the generator unit, i.e. the half power)
    static Poly var(SigPtr sig, const std::string& name, Coeff c = Coeff(1)) {
        MonoidElem e = unit_elem(*sig);
        e.exps[sig->axis_index(name)] = 1;
        return monomial(std::move(sig), std::move(e), std::move(c));
    }

    static Poly prime_monomial(SigPtr sig, int prime_axis, Factorization f,
                               Coeff c = Coeff(1)) {
        MonoidElem e = unit_elem(*sig);
        e.primes[prime_axis] = std::move(f);
        return monomial(std::move(sig), std::move(e), std::move(c));
    }

    const SigPtr& sig() const { return sig_; }
    const std::map<MonoidElem, Coeff, TermOrder>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    bool is_constant() const {
        return terms_.empty() ||
               (terms_.size() == 1 && terms_.begin()->first == unit_elem(*sig_));
    }
    Coeff constant_value() const {
        if (terms_.empty()) return Coeff(0);
        if (!is_constant()) throw Error("polynomial is not constant");
        return terms_.begin()->second;
    }

    Poly& operator+=(const Poly& o) {
        check_sig(o);
        for (const auto& [m, c] : o.terms_) add_term(m, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        check_sig(o);
        for (const auto& [m, c] : o.terms_) add_term(m, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_sig(b);
        Poly out(a.sig_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_)
                out.add_term(elem_mul(*a.sig_, ma, mb), ca * cb);
        return out;
    }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend Poly operator*(const Coeff& c, Poly p) {
        Poly out(p.sig_);
        for (auto& [m, pc] : p.terms_) {
            Coeff v = c * pc;
            if (!v.is_zero()) out.terms_.emplace(m, std::move(v));
        }
        return out;
    }

    Poly pow(long long e) const {
        if (e < 0) {
            if (terms_.size() != 1) throw Error("cannot invert a non-monomial polynomial");
            return inverse_term().pow(-e);
        }
        Poly acc = constant(sig_, Coeff(1));
        Poly base = *this;
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // Inverse of a single-term polynomial (exponents negate; domains are
    // re-checked by canonicalize).
    Poly inverse_term() const {
        if (terms_.size() != 1) throw Error("cannot invert a non-monomial polynomial");
        MonoidElem e = terms_.begin()->first;
        for (auto& x : e.exps) x = -x;
        for (auto& f : e.primes)
            for (auto& [p, k] : f) k = -k;
        return monomial(sig_, std::move(e), terms_.begin()->second.inverse());
    }

    friend bool operator==(const Poly& a, const Poly& b) {
        a.check_sig(b);
        return a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly specialize(const Specialization& s) const {
        const MonoidSig& src = *sig_;
        const MonoidSig& dst = *s.target;
        // precompute pass-through axis maps
        std::vector<int> pass(src.axes.size(), -1);
        for (size_t i = 0; i < src.axes.size(); ++i) {
            if (s.axis_values.count((int)i)) continue;
            for (size_t j = 0; j < dst.axes.size(); ++j)
                if (dst.axes[j].name == src.axes[i].name &&
                    dst.axes[j].half == src.axes[i].half) {
                    pass[i] = (int)j;
                    break;
                }
        }
        std::vector<int> prime_pass(src.prime_axes.size(), -1);
        for (size_t i = 0; i < src.prime_axes.size(); ++i) {
            if (s.prime_values.count((int)i)) continue;
            for (size_t j = 0; j < dst.prime_axes.size(); ++j)
                if (dst.prime_axes[j].name == src.prime_axes[i].name) {
                    prime_pass[i] = (int)j;
                    break;
                }
        }
        Poly out = zero(s.target);
        for (const auto& [m, c] : terms_) {
            Poly term = constant(s.target, c);
            MonoidElem carried = unit_elem(dst);
            for (size_t i = 0; i < src.axes.size(); ++i) {
                if (m.exps[i] == 0) continue;
                auto it = s.axis_values.find((int)i);
                if (it != s.axis_values.end()) {
                    term *= it->second.pow(m.exps[i]);
                } else if (pass[i] >= 0) {
                    carried.exps[pass[i]] += m.exps[i];
                } else {
                    throw MissingAssignmentError("no value for axis '" + src.axes[i].name +
                                                 "'");
                }
            }
            for (size_t i = 0; i < src.prime_axes.size(); ++i) {
                if (m.primes[i].empty()) continue;
                auto it = s.prime_values.find((int)i);
                if (it != s.prime_values.end()) {
                    for (auto& [p, k] : m.primes[i]) term *= it->second(p).pow(k);
                } else if (prime_pass[i] >= 0) {
                    carried.primes[prime_pass[i]] =
                        factorization_mul(carried.primes[prime_pass[i]], m.primes[i]);
                } else {
                    throw MissingAssignmentError("no value for prime axis '" +
                                                 src.prime_axes[i].name + "'");
                }
            }
            out += term * monomial(s.target, std::move(carried));
        }
        return out;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [m, c] : terms_) {
            if (!first) os << " + ";
            first = false;
            os << term_str(m, c);
        }
        return os.str();
    }

    friend std::ostream& operator<<(std::ostream& os, const Poly& p) {
        return os << p.str();
    }

private:
    void check_sig(const Poly& o) const {
        if (sig_ == o.sig_) return;
        if (!sig_ || !o.sig_ || !sig_->same_shape(*o.sig_))
            throw SignatureError("polynomials over different signatures");
    }

    void add_term(const MonoidElem& m, const Coeff& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    static std::string exp_str(const Axis& ax, long long stored) {
        if (!ax.half) return std::to_string(stored);
        if (stored % 2 == 0) return std::to_string(stored / 2);
        return "(" + std::to_string(stored) + "/2)";
    }

    std::string term_str(const MonoidElem& m, const Coeff& c) const {
        const MonoidSig& sig = *sig_;
        std::vector<std::string> factors;
        for (size_t i = 0; i < sig.prime_axes.size(); ++i) {
            if (m.primes[i].empty()) continue;
            std::ostringstream os;
            if (sig.prime_axes.size() > 1) os << sig.prime_axes[i].name;
            os << "[";
            bool f = true;
            for (auto& [p, k] : m.primes[i]) {
                if (!f) os << "*";
                f = false;
                os << p << "^" << k;
            }
            os << "]";
            factors.push_back(os.str());
        }
        for (size_t i = 0; i < sig.axes.size(); ++i)
            if (m.exps[i] != 0)
                factors.push_back(sig.axes[i].name + "^" + exp_str(sig.axes[i], m.exps[i]));
        std::ostringstream os;
        if (factors.empty()) {
            os << c.str();
        } else {
            // with a bracketed monoid coefficient, +-1 folds into the bracket
            bool bracket = false;
            for (const auto& f : m.primes) bracket = bracket || !f.empty();
            if (c.is_one() && bracket) {
                // nothing
            } else if (c == Coeff(-1) && bracket) {
                os << "-";
            } else {
                os << c.str() << "*";
            }
            for (size_t i = 0; i < factors.size(); ++i) {
                if (i) os << "*";
                os << factors[i];
            }
        }
        return os.str();
    }

    SigPtr sig_;
    std::map<MonoidElem, Coeff, TermOrder> terms_;
};

}  // namespace tutte
