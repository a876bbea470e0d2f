/**
 * @file grobner.hpp
 * @brief Buchberger's algorithm, normal forms, initial ideals, weight-order
 *        initial ideals, and block elimination.
 *
 * Pair selection is the normal strategy (smallest lcm degree first) with the
 * product criterion. An optional degree cap truncates the computation: with
 * homogeneous input the result is a Groebner basis of the ideal in all degrees
 * up to the cap.
 */
#pragma once

#include <algorithm>
#include <span>
#include <vector>

#include "ginred/monomial_ideal.hpp"
#include "ginred/polynomial.hpp"
#include "ginred/ring_maps.hpp"

namespace ginred {

namespace gbdetail {

// engine-local representation: terms strictly descending under the engine order
template <FieldContext K>
using Terms = std::vector<typename Poly<K>::Term>;

template <FieldContext K>
Terms<K> from_poly(const Poly<K>& f, const TermOrder& order) {
    Terms<K> t(f.terms().begin(), f.terms().end());
    std::sort(t.begin(), t.end(), [&](const auto& a, const auto& b) {
        return order.greater(a.mono, b.mono);
    });
    return t;
}

template <FieldContext K>
Poly<K> to_poly(const RingPtr<K>& ring, Terms<K> t) {
    return Poly<K>::from_terms(ring, std::move(t));
}

// a -= c * m * b, both descending under `order`; multiplicativity keeps m*b sorted
template <FieldContext K>
Terms<K> sub_scaled(const Terms<K>& a, const typename K::Elem& c, const Monomial& m,
                    const Terms<K>& b, const TermOrder& order, const K& F) {
    Terms<K> out;
    out.reserve(a.size() + b.size());
    size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size()) {
            out.push_back(a[i++]);
            continue;
        }
        Monomial mb = b[j].mono.times(m);
        if (i == a.size()) {
            typename K::Elem cb = F.neg(F.mul(c, b[j].coeff));
            if (!F.is_zero(cb)) out.push_back({std::move(mb), std::move(cb)});
            ++j;
            continue;
        }
        Ordering cmp = order.compare(a[i].mono, mb);
        if (cmp == Ordering::greater) {
            out.push_back(a[i++]);
        } else if (cmp == Ordering::less) {
            typename K::Elem cb = F.neg(F.mul(c, b[j].coeff));
            if (!F.is_zero(cb)) out.push_back({std::move(mb), std::move(cb)});
            ++j;
        } else {
            typename K::Elem cc = F.sub(a[i].coeff, F.mul(c, b[j].coeff));
            if (!F.is_zero(cc)) out.push_back({a[i].mono, std::move(cc)});
            ++i;
            ++j;
        }
    }
    return out;
}

template <FieldContext K>
void make_monic(Terms<K>& t, const K& F) {
    if (t.empty() || F.is_one(t.front().coeff)) return;
    typename K::Elem inv = F.inv(t.front().coeff);
    for (auto& term : t) term.coeff = F.mul(term.coeff, inv);
}

// full reduction; the reducer is the first basis element in list order whose
// leading monomial divides
template <FieldContext K>
Terms<K> reduce(Terms<K> h, const std::vector<Terms<K>>& basis, const TermOrder& order, const K& F) {
    Terms<K> remainder;
    while (!h.empty()) {
        bool reduced = false;
        for (const auto& b : basis) {
            if (b.empty() || !b.front().mono.divides(h.front().mono)) continue;
            typename K::Elem c = F.div(h.front().coeff, b.front().coeff);
            h = sub_scaled(h, c, h.front().mono.divide_by(b.front().mono), b, order, F);
            reduced = true;
            break;
        }
        if (!reduced) {
            remainder.push_back(std::move(h.front()));
            h.erase(h.begin());
        }
    }
    return remainder;
}

}  // namespace gbdetail

template <FieldContext K>
struct GroebnerBasis {
    TermOrder order;
    std::vector<Poly<K>> generators;  // monic, interreduced, descending leading monomials
    bool reduced = true;
};

template <FieldContext K>
Poly<K> s_polynomial(const Poly<K>& f, const Poly<K>& g, const TermOrder& order) {
    if (f.is_zero() || g.is_zero()) throw Error("s-polynomial of a zero polynomial");
    require_same_ring(f.ring(), g.ring());
    const K& F = f.ring()->field;
    const auto& ltf = f.leading_term(order);
    const auto& ltg = g.leading_term(order);
    Monomial L = lcm(ltf.mono, ltg.mono);
    Poly<K> left = f.times_term(L.divide_by(ltf.mono), F.inv(ltf.coeff));
    Poly<K> right = g.times_term(L.divide_by(ltg.mono), F.inv(ltg.coeff));
    return left - right;
}

template <FieldContext K>
Poly<K> normal_form(const Poly<K>& f, std::span<const Poly<K>> basis, const TermOrder& order) {
    const K& F = f.ring()->field;
    std::vector<gbdetail::Terms<K>> b;
    b.reserve(basis.size());
    for (const auto& g : basis) {
        if (g.is_zero()) throw Error("zero polynomial in a reduction basis");
        require_same_ring(f.ring(), g.ring());
        b.push_back(gbdetail::from_poly(g, order));
    }
    return gbdetail::to_poly(f.ring(), gbdetail::reduce(gbdetail::from_poly(f, order), b, order, F));
}

template <FieldContext K>
GroebnerBasis<K> buchberger(std::span<const Poly<K>> gens, const TermOrder& order,
                            int degree_cap = 0) {
    GroebnerBasis<K> result{order, {}, true};
    RingPtr<K> ring;
    for (const auto& g : gens) {
        if (ring)
            require_same_ring(ring, g.ring());
        else
            ring = g.ring();
    }
    if (!ring) return result;
    const K& F = ring->field;

    using gbdetail::Terms;
    std::vector<Terms<K>> G;
    for (const auto& g : gens) {
        if (g.is_zero()) continue;
        if (degree_cap > 0 && g.degree() > degree_cap) continue;
        auto t = gbdetail::from_poly(g, order);
        gbdetail::make_monic(t, F);
        G.push_back(std::move(t));
    }

    struct Pair {
        size_t i, j;
        Monomial lcm;
    };
    std::vector<Pair> pairs;
    auto enqueue = [&](size_t i, size_t j) {
        const Monomial& a = G[i].front().mono;
        const Monomial& b = G[j].front().mono;
        if (coprime(a, b)) return;  // product criterion
        Monomial L = lcm(a, b);
        if (degree_cap > 0 && L.degree() > degree_cap) return;
        pairs.push_back({i, j, std::move(L)});
    };
    for (size_t j = 1; j < G.size(); ++j)
        for (size_t i = 0; i < j; ++i) enqueue(i, j);

    while (!pairs.empty()) {
        size_t best = 0;
        for (size_t k = 1; k < pairs.size(); ++k) {
            const Pair &a = pairs[k], &b = pairs[best];
            if (a.lcm.degree() != b.lcm.degree()) {
                if (a.lcm.degree() < b.lcm.degree()) best = k;
            } else if (order.less(a.lcm, b.lcm)) {
                best = k;
            }
        }
        Pair p = std::move(pairs[best]);
        pairs.erase(pairs.begin() + static_cast<std::ptrdiff_t>(best));

        const auto& fi = G[p.i];
        const auto& fj = G[p.j];
        Terms<K> s = gbdetail::sub_scaled(
            Terms<K>{}, F.neg(F.one()), p.lcm.divide_by(fi.front().mono), fi, order, F);
        s = gbdetail::sub_scaled(s, F.one(), p.lcm.divide_by(fj.front().mono), fj, order, F);
        Terms<K> h = gbdetail::reduce(std::move(s), G, order, F);
        if (h.empty()) continue;
        gbdetail::make_monic(h, F);
        size_t idx = G.size();
        G.push_back(std::move(h));
        for (size_t i = 0; i < idx; ++i) enqueue(i, idx);
    }

    // interreduce: drop generators whose leading monomial another one divides
    std::vector<bool> removed(G.size(), false);
    for (size_t i = 0; i < G.size(); ++i) {
        for (size_t j = 0; j < G.size(); ++j) {
            if (i == j || removed[j]) continue;
            if (G[j].front().mono.divides(G[i].front().mono)) {
                removed[i] = true;
                break;
            }
        }
    }
    std::vector<Terms<K>> kept;
    for (size_t i = 0; i < G.size(); ++i)
        if (!removed[i]) kept.push_back(std::move(G[i]));

    // full tail reduction of each element against the others
    std::vector<Terms<K>> reduced;
    for (size_t i = 0; i < kept.size(); ++i) {
        std::vector<Terms<K>> others;
        others.reserve(kept.size() - 1);
        for (size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        Terms<K> r = gbdetail::reduce(kept[i], others, order, F);
        gbdetail::make_monic(r, F);
        reduced.push_back(std::move(r));
    }

    std::sort(reduced.begin(), reduced.end(), [&](const Terms<K>& a, const Terms<K>& b) {
        return order.greater(a.front().mono, b.front().mono);
    });
    for (auto& t : reduced) result.generators.push_back(gbdetail::to_poly(ring, std::move(t)));
    return result;
}

/// Minimal monomial generators of the ideal of leading monomials.
template <FieldContext K>
MonomialIdeal initial_ideal(const RingPtr<K>& ring, std::span<const Poly<K>> gens,
                            const TermOrder& order, int degree_cap = 0) {
    GroebnerBasis<K> gb = buchberger(gens, order, degree_cap);
    std::vector<Monomial> lms;
    lms.reserve(gb.generators.size());
    for (const auto& g : gb.generators) lms.push_back(g.leading_term(order).mono);
    return MonomialIdeal::minimalize(ring->nvars, std::move(lms));
}

template <FieldContext K>
MonomialIdeal initial_ideal(std::span<const Poly<K>> gens, const TermOrder& order,
                            int degree_cap = 0) {
    if (gens.empty()) throw Error("initial ideal of an unspecified ring; pass the ring explicitly");
    return initial_ideal(gens.front().ring(), gens, order, degree_cap);
}

/// Generators of the weight-order initial ideal: the top-weight forms of a
/// Groebner basis under the weight-refined order. May be non-monomial.
template <FieldContext K>
std::vector<Poly<K>> initial_ideal_weight(std::span<const Poly<K>> gens,
                                          std::span<const long long> w, int degree_cap = 0) {
    std::vector<long long> weights(w.begin(), w.end());
    TermOrder order = TermOrder::weighted(weights);
    GroebnerBasis<K> gb = buchberger(gens, order, degree_cap);
    std::vector<Poly<K>> forms;
    forms.reserve(gb.generators.size());
    for (const auto& g : gb.generators) {
        long long top = 0;
        for (const auto& t : g.terms()) {
            long long wt = 0;
            for (int i = 0; i < t.mono.nvars(); ++i) wt += weights[static_cast<size_t>(i)] * t.mono[i];
            top = std::max(top, wt);
        }
        std::vector<typename Poly<K>::Term> kept;
        for (const auto& t : g.terms()) {
            long long wt = 0;
            for (int i = 0; i < t.mono.nvars(); ++i) wt += weights[static_cast<size_t>(i)] * t.mono[i];
            if (wt == top) kept.push_back(t);
        }
        forms.push_back(Poly<K>::from_terms(g.ring(), std::move(kept)));
    }
    return forms;
}

/// Generators of the elimination ideal: Groebner basis elements supported away
/// from the first `head` variables, under a block order eliminating them.
/// Results stay in the ambient ring.
template <FieldContext K>
std::vector<Poly<K>> eliminate(std::span<const Poly<K>> gens, int head) {
    GroebnerBasis<K> gb = buchberger(gens, TermOrder::block(head));
    std::vector<Poly<K>> kept;
    for (const auto& g : gb.generators) {
        bool tail_only = true;
        for (const auto& t : g.terms())
            for (int i = 0; i < head && tail_only; ++i)
                if (t.mono[i] > 0) tail_only = false;
        if (tail_only) kept.push_back(g);
    }
    return kept;
}

}  // namespace ginred
