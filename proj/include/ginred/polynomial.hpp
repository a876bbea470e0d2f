/**
 * @file polynomial.hpp
 * @brief Sparse multivariate polynomials with exact coefficients.
 *
 * Terms are kept sorted by the ambient degrevlex order so that leading-term
 * queries under any other order are a linear scan rather than a resort.
 */
#pragma once

#include <algorithm>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "ginred/order.hpp"
#include "ginred/ring.hpp"

namespace ginred {

template <FieldContext K>
class Poly {
public:
    using Elem = typename K::Elem;
    struct Term {
        Monomial mono;
        Elem coeff;
    };

    explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}

    static Poly from_terms(RingPtr<K> ring, std::vector<Term> terms) {
        const K& F = ring->field;
        std::sort(terms.begin(), terms.end(),
                  [](const Term& a, const Term& b) { return ambient_greater(a.mono, b.mono); });
        std::vector<Term> merged;
        merged.reserve(terms.size());
        for (auto& t : terms) {
            if (t.mono.nvars() != ring->nvars) throw Error("monomial does not fit the ring");
            if (!merged.empty() && merged.back().mono == t.mono)
                merged.back().coeff = F.add(merged.back().coeff, t.coeff);
            else
                merged.push_back(std::move(t));
        }
        std::erase_if(merged, [&](const Term& t) { return F.is_zero(t.coeff); });
        Poly p(std::move(ring));
        p.terms_ = std::move(merged);
        return p;
    }

    static Poly constant(RingPtr<K> ring, Elem c) {
        Poly p(ring);
        if (!ring->field.is_zero(c)) p.terms_.push_back({Monomial(ring->nvars), std::move(c)});
        return p;
    }

    static Poly term(RingPtr<K> ring, Monomial m, Elem c) {
        Poly p(ring);
        if (m.nvars() != ring->nvars) throw Error("monomial does not fit the ring");
        if (!ring->field.is_zero(c)) p.terms_.push_back({std::move(m), std::move(c)});
        return p;
    }

    static Poly var(RingPtr<K> ring, int i, int power = 1) {
        return term(ring, Monomial::variable(ring->nvars, i, power), ring->field.one());
    }

    const RingPtr<K>& ring() const { return ring_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int nterms() const { return static_cast<int>(terms_.size()); }

    int degree() const {
        int d = -1;
        for (const auto& t : terms_) d = std::max(d, t.mono.degree());
        return d;
    }

    bool is_homogeneous() const {
        for (const auto& t : terms_)
            if (t.mono.degree() != terms_.front().mono.degree()) return false;
        return true;
    }

    Poly operator+(const Poly& g) const { return combine(g, false); }
    Poly operator-(const Poly& g) const { return combine(g, true); }

    Poly operator-() const {
        Poly r(*this);
        for (auto& t : r.terms_) t.coeff = field().neg(t.coeff);
        return r;
    }

    Poly scale(const Elem& c) const {
        const K& F = field();
        Poly r(ring_);
        if (F.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono, F.mul(t.coeff, c)});
        return r;
    }

    /// this * (c * m); multiplicative orders keep sortedness, so no resort happens.
    Poly times_term(const Monomial& m, const Elem& c) const {
        const K& F = field();
        Poly r(ring_);
        if (F.is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) r.terms_.push_back({t.mono.times(m), F.mul(t.coeff, c)});
        return r;
    }

    Poly operator*(const Poly& g) const {
        require_same_ring(ring_, g.ring_);
        const K& F = field();
        std::map<Monomial, Elem, AmbientGreater> acc;
        for (const auto& a : terms_) {
            for (const auto& b : g.terms_) {
                Monomial m = a.mono.times(b.mono);
                Elem c = F.mul(a.coeff, b.coeff);
                auto it = acc.find(m);
                if (it == acc.end())
                    acc.emplace(std::move(m), std::move(c));
                else
                    it->second = F.add(it->second, c);
            }
        }
        Poly r(ring_);
        r.terms_.reserve(acc.size());
        for (auto& [m, c] : acc)
            if (!F.is_zero(c)) r.terms_.push_back({m, c});
        return r;
    }

    Poly pow(int k) const {
        Poly r = constant(ring_, field().one());
        Poly base(*this);
        for (; k > 0; k >>= 1) {
            if (k & 1) r = r * base;
            if (k > 1) base = base * base;
        }
        return r;
    }

    const Term& leading_term(const TermOrder& order) const {
        if (terms_.empty()) throw Error("leading term of the zero polynomial");
        if (order.kind() == TermOrder::Kind::degrevlex) return terms_.front();
        const Term* best = &terms_.front();
        for (const auto& t : terms_)
            if (order.greater(t.mono, best->mono)) best = &t;
        return *best;
    }

    /// Leading coefficient scaled to one.
    Poly monic(const TermOrder& order) const {
        if (terms_.empty()) return *this;
        return scale(field().inv(leading_term(order).coeff));
    }

    bool operator==(const Poly& g) const {
        if (!same_ring(ring_, g.ring_) || terms_.size() != g.terms_.size()) return false;
        const K& F = field();
        for (size_t i = 0; i < terms_.size(); ++i)
            if (!(terms_[i].mono == g.terms_[i].mono) || !F.equal(terms_[i].coeff, g.terms_[i].coeff))
                return false;
        return true;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        const K& F = field();
        std::string s;
        for (size_t i = 0; i < terms_.size(); ++i) {
            auto [negative, mag] = F.display(terms_[i].coeff);
            if (i == 0)
                s += negative ? "-" : "";
            else
                s += negative ? " - " : " + ";
            const Monomial& m = terms_[i].mono;
            if (m.is_unit())
                s += mag;
            else if (mag == "1")
                s += to_string(m, ring_->names);
            else
                s += mag + "*" + to_string(m, ring_->names);
        }
        return s;
    }

private:
    Poly combine(const Poly& g, bool subtract) const {
        require_same_ring(ring_, g.ring_);
        const K& F = field();
        Poly r(ring_);
        r.terms_.reserve(terms_.size() + g.terms_.size());
        size_t i = 0, j = 0;
        while (i < terms_.size() || j < g.terms_.size()) {
            if (j == g.terms_.size() ||
                (i < terms_.size() && ambient_greater(terms_[i].mono, g.terms_[j].mono))) {
                r.terms_.push_back(terms_[i++]);
            } else if (i == terms_.size() || ambient_greater(g.terms_[j].mono, terms_[i].mono)) {
                Elem c = subtract ? F.neg(g.terms_[j].coeff) : g.terms_[j].coeff;
                if (!F.is_zero(c)) r.terms_.push_back({g.terms_[j].mono, std::move(c)});
                ++j;
            } else {
                Elem c = subtract ? F.sub(terms_[i].coeff, g.terms_[j].coeff)
                                  : F.add(terms_[i].coeff, g.terms_[j].coeff);
                if (!F.is_zero(c)) r.terms_.push_back({terms_[i].mono, std::move(c)});
                ++i;
                ++j;
            }
        }
        return r;
    }

    const K& field() const { return ring_->field; }

    RingPtr<K> ring_;
    std::vector<Term> terms_;
};

/// f - c * m * g, merged in one pass; the workhorse of polynomial reduction.
template <FieldContext K>
Poly<K> subtract_scaled(const Poly<K>& f, const typename K::Elem& c, const Monomial& m,
                        const Poly<K>& g) {
    return f - g.times_term(m, c);
}

}  // namespace ginred
