#pragma once

#include <map>
#include <utility>

#include "hopfchar/rational.hpp"

namespace hopfchar {

inline bool coeff_is_zero(const Rat& c) { return c == 0; }
inline bool coeff_is_zero(const CRat& c) { return c.is_zero(); }

/// Finite linear combination of basis keys with exact coefficients.
/// Zero coefficients are never stored; keys are kept in their natural order,
/// so iteration (and therefore every serialization) is deterministic.
template <class Key, class Coef>
class Combo {
public:
    using map_type = std::map<Key, Coef>;

    Combo() = default;

    static Combo monomial(Key k, Coef c = Coef(1)) {
        Combo r;
        r.add_term(std::move(k), std::move(c));
        return r;
    }

    void add_term(Key k, Coef c) {
        if (coeff_is_zero(c)) return;
        auto [it, fresh] = terms_.emplace(std::move(k), c);
        if (!fresh) {
            it->second += c;
            if (coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    Coef coefficient(const Key& k) const {
        auto it = terms_.find(k);
        return it == terms_.end() ? Coef(0) : it->second;
    }

    bool empty() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // rvalue overload keeps range-for over a temporary's terms well-defined
    const map_type& terms() const& { return terms_; }
    map_type terms() && { return std::move(terms_); }

    Combo& operator+=(const Combo& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Combo& operator-=(const Combo& o) {
        for (const auto& [k, c] : o.terms_) add_term(k, Coef(-c));
        return *this;
    }
    Combo& operator*=(const Coef& s) {
        if (coeff_is_zero(s)) { terms_.clear(); return *this; }
        for (auto& [k, c] : terms_) c *= s;
        return *this;
    }
    friend Combo operator+(Combo a, const Combo& b) { a += b; return a; }
    friend Combo operator-(Combo a, const Combo& b) { a -= b; return a; }
    friend Combo operator*(Combo a, const Coef& s) { a *= s; return a; }
    friend Combo operator-(const Combo& a) { Combo r; for (const auto& [k, c] : a.terms_) r.add_term(k, Coef(-c)); return r; }

    friend bool operator==(const Combo& a, const Combo& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Combo& a, const Combo& b) { return !(a == b); }

private:
    map_type terms_;
};

/// Bilinear extension of a product on keys. `mul` maps a pair of keys to a
/// Combo (a single term for forests, several for shuffles).
template <class Key, class Coef, class MulFn>
Combo<Key, Coef> multiply(const Combo<Key, Coef>& a, const Combo<Key, Coef>& b, MulFn&& mul) {
    Combo<Key, Coef> out;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            Combo<Key, Coef> prod = mul(ka, kb);
            Coef scale = ca;
            scale *= cb;
            prod *= scale;
            out += prod;
        }
    return out;
}

/// Linear extension of a key-level map into combos.
template <class KeyOut, class Key, class Coef, class Fn>
Combo<KeyOut, Coef> extend_linear(const Combo<Key, Coef>& x, Fn&& f) {
    Combo<KeyOut, Coef> out;
    for (const auto& [k, c] : x.terms()) {
        Combo<KeyOut, Coef> img = f(k);
        img *= c;
        out += img;
    }
    return out;
}

template <class Key>
using TensorKey = std::pair<Key, Key>;

} // namespace hopfchar
