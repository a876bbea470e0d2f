/**
 * @file exterior.hpp
 * @brief Standard exterior monomials, wedge powers of graded subspaces, supports,
 *        and the dominance checks that connect them to generic initial subspaces.
 *
 * A wedge m_1 ^ ... ^ m_d of distinct equal-degree monomials is sigma-standard
 * when the parts strictly descend under sigma. Standard wedges of one (degree,
 * arity) are ordered by their first differing part.
 */
#pragma once

#include <map>
#include <optional>
#include <span>

#include "ginred/gin.hpp"
#include "ginred/linalg.hpp"
#include "ginred/polynomial.hpp"

namespace ginred {

struct ExtMonomial {
    std::vector<Monomial> parts;
    bool operator==(const ExtMonomial&) const = default;
};

inline Ordering compare_exterior(const TermOrder& order, const ExtMonomial& a,
                                 const ExtMonomial& b) {
    if (a.parts.size() != b.parts.size()) throw Error("comparing wedges of different arity");
    for (size_t i = 0; i < a.parts.size(); ++i) {
        if (a.parts[i].degree() != b.parts[i].degree())
            throw Error("comparing wedges of different degree");
        Ordering o = order.compare(a.parts[i], b.parts[i]);
        if (o != Ordering::equal) return o;
    }
    return Ordering::equal;
}

/// Sorts into strict descent under `order`, tracking the permutation sign.
/// Returns nothing when two parts coincide (the wedge vanishes).
inline std::optional<std::pair<ExtMonomial, int>> standard_form(std::vector<Monomial> parts,
                                                                const TermOrder& order) {
    for (size_t i = 1; i < parts.size(); ++i)
        if (parts[i].degree() != parts[0].degree()) throw Error("wedge parts of mixed degrees");
    int sign = 1;
    for (size_t i = 1; i < parts.size(); ++i) {  // insertion sort, counting transpositions
        size_t j = i;
        while (j > 0) {
            Ordering o = order.compare(parts[j - 1], parts[j]);
            if (o == Ordering::equal) return std::nullopt;
            if (o == Ordering::greater) break;
            std::swap(parts[j - 1], parts[j]);
            sign = -sign;
            --j;
        }
    }
    return std::make_pair(ExtMonomial{std::move(parts)}, sign);
}

namespace extdetail {

struct PartsLess {
    bool operator()(const ExtMonomial& a, const ExtMonomial& b) const {
        for (size_t i = 0; i < std::min(a.parts.size(), b.parts.size()); ++i) {
            Ordering o = ambient_compare(a.parts[i], b.parts[i]);
            if (o != Ordering::equal) return o == Ordering::less;
        }
        return a.parts.size() < b.parts.size();
    }
};

}  // namespace extdetail

/// Exact linear combination of sigma-standard exterior monomials of one
/// (degree, arity). Keys are standard for the order the element was built with.
template <FieldContext K>
class WedgeElement {
public:
    using Elem = typename K::Elem;
    using CoeffMap = std::map<ExtMonomial, Elem, extdetail::PartsLess>;

    WedgeElement(RingPtr<K> ring, TermOrder order, int degree, int arity)
        : ring_(std::move(ring)), order_(std::move(order)), degree_(degree), arity_(arity) {}

    const RingPtr<K>& ring() const { return ring_; }
    const TermOrder& order() const { return order_; }
    int degree() const { return degree_; }
    int arity() const { return arity_; }
    bool is_zero() const { return coeffs_.empty(); }
    const CoeffMap& coefficients() const { return coeffs_; }

    void accumulate(std::vector<Monomial> parts, Elem c) {
        const K& F = ring_->field;
        if (F.is_zero(c)) return;
        auto std_form = standard_form(std::move(parts), order_);
        if (!std_form) return;
        auto& [key, sign] = *std_form;
        if (sign < 0) c = F.neg(c);
        auto it = coeffs_.find(key);
        if (it == coeffs_.end()) {
            coeffs_.emplace(std::move(key), std::move(c));
        } else {
            it->second = F.add(it->second, c);
            if (F.is_zero(it->second)) coeffs_.erase(it);
        }
    }

    std::vector<ExtMonomial> support() const {
        std::vector<ExtMonomial> s;
        s.reserve(coeffs_.size());
        for (const auto& [k, c] : coeffs_) s.push_back(k);
        return s;
    }

    /// The compare_exterior-maximal standard monomial.
    ExtMonomial initial() const {
        if (coeffs_.empty()) throw Error("initial monomial of the zero wedge element");
        const ExtMonomial* best = &coeffs_.begin()->first;
        for (const auto& [k, c] : coeffs_)
            if (compare_exterior(order_, k, *best) == Ordering::greater) best = &k;
        return *best;
    }

    /// Scales the initial coefficient to one; stable equality for tests.
    void canonicalize() {
        if (coeffs_.empty()) return;
        const K& F = ring_->field;
        Elem lead = coeffs_.at(initial());
        Elem inv = F.inv(lead);
        for (auto& [k, c] : coeffs_) c = F.mul(c, inv);
    }

    /// The same element re-expressed with tau-standard keys.
    WedgeElement restandardized(const TermOrder& tau) const {
        WedgeElement out(ring_, tau, degree_, arity_);
        for (const auto& [k, c] : coeffs_) out.accumulate(k.parts, c);
        return out;
    }

    bool operator==(const WedgeElement& other) const {
        if (coeffs_.size() != other.coeffs_.size()) return false;
        auto it = coeffs_.begin();
        auto jt = other.coeffs_.begin();
        const K& F = ring_->field;
        for (; it != coeffs_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || !F.equal(it->second, jt->second)) return false;
        return true;
    }

private:
    RingPtr<K> ring_;
    TermOrder order_;
    int degree_;
    int arity_;
    CoeffMap coeffs_;
};

/// Checks exact linear independence of equal-degree forms.
template <FieldContext K>
bool independent(std::span<const Poly<K>> basis) {
    if (basis.empty()) return true;
    const RingPtr<K>& ring = basis.front().ring();
    const K& F = ring->field;
    int degree = basis.front().degree();
    auto monos = monomials_of_degree(ring->nvars, degree);
    std::map<Monomial, int, AmbientGreater> index;
    for (size_t c = 0; c < monos.size(); ++c) index.emplace(monos[c], static_cast<int>(c));
    Matrix<K> m(static_cast<int>(basis.size()), static_cast<int>(monos.size()), F.zero());
    for (size_t r = 0; r < basis.size(); ++r) {
        if (basis[r].is_zero() || basis[r].degree() != degree || !basis[r].is_homogeneous())
            return false;
        for (const auto& t : basis[r].terms())
            m.at(static_cast<int>(r), index.at(t.mono)) = t.coeff;
    }
    return rank_of(std::move(m), F) == static_cast<int>(basis.size());
}

/// Expands f_1 ^ ... ^ f_d by picking one term from each factor. The expansion
/// is guarded: more than `guard` products is an error.
template <FieldContext K>
WedgeElement<K> wedge_of_subspace(std::span<const Poly<K>> basis, const TermOrder& sigma,
                                  long long guard = 1'000'000) {
    if (basis.empty()) throw Error("wedge of an empty family");
    const RingPtr<K>& ring = basis.front().ring();
    const K& F = ring->field;
    if (!independent(basis)) throw Error("wedge of a dependent family");

    long long products = 1;
    for (const auto& f : basis) {
        products *= f.nterms();
        if (products > guard) throw Error("wedge expansion exceeds the product guard");
    }

    int degree = basis.front().degree();
    int d = static_cast<int>(basis.size());
    WedgeElement<K> out(ring, sigma, degree, d);

    std::vector<size_t> pick(static_cast<size_t>(d), 0);
    while (true) {
        std::vector<Monomial> parts;
        parts.reserve(static_cast<size_t>(d));
        typename K::Elem c = F.one();
        for (int i = 0; i < d; ++i) {
            const auto& t = basis[static_cast<size_t>(i)].terms()[pick[static_cast<size_t>(i)]];
            parts.push_back(t.mono);
            c = F.mul(c, t.coeff);
        }
        out.accumulate(std::move(parts), std::move(c));

        int i = d - 1;
        while (i >= 0) {
            if (++pick[static_cast<size_t>(i)] <
                basis[static_cast<size_t>(i)].terms().size())
                break;
            pick[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
    }
    if (out.is_zero()) throw Error("wedge of a dependent family");
    out.canonicalize();
    return out;
}

/// Leading monomials of the reduced row-echelon basis of span(basis), with
/// columns ordered tau-descending: the monomial generators of in_tau(V).
template <FieldContext K>
std::vector<Monomial> initial_subspace(std::span<const Poly<K>> basis, const TermOrder& tau) {
    if (basis.empty()) return {};
    const RingPtr<K>& ring = basis.front().ring();
    const K& F = ring->field;
    int degree = basis.front().degree();
    auto monos = monomials_of_degree(ring->nvars, degree);
    std::sort(monos.begin(), monos.end(),
              [&](const Monomial& a, const Monomial& b) { return tau.greater(a, b); });
    std::map<Monomial, int, AmbientGreater> index;
    for (size_t c = 0; c < monos.size(); ++c) index.emplace(monos[c], static_cast<int>(c));

    Matrix<K> m(static_cast<int>(basis.size()), static_cast<int>(monos.size()), F.zero());
    for (size_t r = 0; r < basis.size(); ++r)
        for (const auto& t : basis[r].terms())
            m.at(static_cast<int>(r), index.at(t.mono)) = t.coeff;
    EchelonInfo info = reduced_row_echelon(m, F);
    if (info.rank != static_cast<int>(basis.size())) throw Error("dependent basis");
    std::vector<Monomial> lead;
    for (int col : info.pivot_cols) lead.push_back(monos[static_cast<size_t>(col)]);
    return lead;  // tau-descending
}

/// Componentwise domination survives standardization: for sigma-standard m and
/// any q with q_i dominated by m_i, the standard form n of q keeps n_i <= m_i.
inline bool check_standardization_dominance(const ExtMonomial& m, std::span<const Monomial> q,
                                            const TermOrder& sigma) {
    if (q.size() != m.parts.size()) throw Error("arity mismatch");
    auto std_form = standard_form({q.begin(), q.end()}, sigma);
    if (!std_form) return true;  // the wedge vanished
    const auto& n = std_form->first;
    for (size_t i = 0; i < n.parts.size(); ++i)
        if (sigma.greater(n.parts[i], m.parts[i])) return false;
    return true;
}

/// The initial standard monomial of a wedge dominates its whole support
/// componentwise.
template <FieldContext K>
bool check_support_dominance(std::span<const Poly<K>> basis, const TermOrder& sigma) {
    WedgeElement<K> w = wedge_of_subspace(basis, sigma);
    ExtMonomial top = w.initial();
    for (const auto& n : w.support())
        for (size_t i = 0; i < n.parts.size(); ++i)
            if (sigma.greater(n.parts[i], top.parts[i])) return false;
    return true;
}

namespace extdetail {

template <FieldContext K>
std::vector<Poly<K>> monomial_basis_polys(const RingPtr<K>& ring, std::span<const Monomial> monos) {
    std::vector<Poly<K>> out;
    for (const auto& m : monos) out.push_back(Poly<K>::term(ring, m, ring->field.one()));
    return out;
}

template <FieldContext K>
bool support_contained(const WedgeElement<K>& inner, const WedgeElement<K>& outer) {
    for (const auto& [k, c] : inner.coefficients())
        if (outer.coefficients().find(k) == outer.coefficients().end()) return false;
    return true;
}

}  // namespace extdetail

/// For W = in_tau(V) and a generic g: Support_sigma(g(wedge W)) is contained in
/// Support_sigma(g(wedge V)). One reseed before reporting failure.
template <FieldContext K>
bool check_generic_support_containment(std::span<const Poly<K>> basis, const TermOrder& sigma,
                                       const TermOrder& tau, std::uint64_t seed) {
    const RingPtr<K>& ring = basis.front().ring();
    auto w_monos = initial_subspace(basis, tau);
    auto w_basis = extdetail::monomial_basis_polys(ring, std::span<const Monomial>(w_monos));
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto g = random_change_of_coordinates(ring, mix_seed(seed, static_cast<std::uint64_t>(attempt)));
        auto gv = g.apply(basis);
        auto gw = g.apply(std::span<const Poly<K>>(w_basis));
        WedgeElement<K> wedge_v = wedge_of_subspace(std::span<const Poly<K>>(gv), sigma);
        WedgeElement<K> wedge_w = wedge_of_subspace(std::span<const Poly<K>>(gw), sigma);
        if (extdetail::support_contained(wedge_w, wedge_v)) return true;
    }
    return false;
}

/// Gin_sigma(V) dominates Gin_sigma(in_tau(V)) componentwise. Optionally
/// cross-checks the degree slice of the ideal-level gin. One reseed.
template <FieldContext K>
bool check_gin_dominance(std::span<const Poly<K>> basis, const TermOrder& sigma,
                         const TermOrder& tau, std::uint64_t seed, bool cross_check_ideal = false) {
    const RingPtr<K>& ring = basis.front().ring();
    auto w_monos = initial_subspace(basis, tau);
    auto w_basis = extdetail::monomial_basis_polys(ring, std::span<const Monomial>(w_monos));
    for (int attempt = 0; attempt < 2; ++attempt) {
        auto g = random_change_of_coordinates(ring, mix_seed(seed, 1000 + static_cast<std::uint64_t>(attempt)));
        auto gv = g.apply(basis);
        auto gw = g.apply(std::span<const Poly<K>>(w_basis));
        ExtMonomial gin_v = wedge_of_subspace(std::span<const Poly<K>>(gv), sigma).initial();
        ExtMonomial gin_w = wedge_of_subspace(std::span<const Poly<K>>(gw), sigma).initial();

        bool dominated = true;
        for (size_t i = 0; i < gin_v.parts.size(); ++i)
            if (sigma.less(gin_v.parts[i], gin_w.parts[i])) dominated = false;
        if (!dominated) continue;

        if (cross_check_ideal) {
            GinResult ideal_gin = gin(ring, basis, sigma, 2,
                                      mix_seed(seed, 2000 + static_cast<std::uint64_t>(attempt)),
                                      basis.front().degree());
            std::vector<Monomial> slice;
            for (const auto& m : monomials_of_degree(ring->nvars, basis.front().degree()))
                if (ideal_gin.ideal.contains(m)) slice.push_back(m);
            std::vector<Monomial> parts = gin_v.parts;
            std::sort(parts.begin(), parts.end(), [](const Monomial& a, const Monomial& b) {
                return ambient_greater(a, b);
            });
            std::sort(slice.begin(), slice.end(), [](const Monomial& a, const Monomial& b) {
                return ambient_greater(a, b);
            });
            if (!(parts == slice)) continue;
        }
        return true;
    }
    return false;
}

}  // namespace ginred
