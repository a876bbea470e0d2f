#pragma once

#include "ginred/monomial_ideal.hpp"
#include "ginred/polynomial.hpp"

namespace ginred {

template <FieldContext K>
RingPtr<K> extended_ring(const RingPtr<K>& base, std::span<const std::string> front,
                         std::span<const std::string> back) {
    std::vector<std::string> names(front.begin(), front.end());
    names.insert(names.end(), base->names.begin(), base->names.end());
    names.insert(names.end(), back.begin(), back.end());
    return make_ring(std::move(names), base->field);
}

/// Reinterprets f in `target`, shifting every exponent block right by `offset`.
template <FieldContext K>
Poly<K> transport(const Poly<K>& f, const RingPtr<K>& target, int offset) {
    std::vector<typename Poly<K>::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<int> e(static_cast<size_t>(target->nvars), 0);
        for (int i = 0; i < t.mono.nvars(); ++i) e[static_cast<size_t>(i + offset)] = t.mono[i];
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Poly<K>::from_terms(target, std::move(terms));
}

/// Projects f, supported on the last target->nvars variables, down to `target`.
template <FieldContext K>
Poly<K> restrict_tail(const Poly<K>& f, const RingPtr<K>& target, int drop) {
    std::vector<typename Poly<K>::Term> terms;
    terms.reserve(f.terms().size());
    for (const auto& t : f.terms()) {
        std::vector<int> e(static_cast<size_t>(target->nvars), 0);
        for (int i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (i < drop) throw Error("polynomial is not supported on the kept variables");
            e[static_cast<size_t>(i - drop)] = t.mono[i];
        }
        terms.push_back({Monomial(std::move(e)), t.coeff});
    }
    return Poly<K>::from_terms(target, std::move(terms));
}

template <FieldContext K>
std::vector<Poly<K>> ideal_polys(const RingPtr<K>& ring, const MonomialIdeal& I) {
    if (I.nvars() != ring->nvars) throw Error("monomial ideal does not fit the ring");
    std::vector<Poly<K>> out;
    out.reserve(I.generators().size());
    for (const auto& g : I.generators()) out.push_back(Poly<K>::term(ring, g, ring->field.one()));
    return out;
}

}  // namespace ginred
