/**
 * @file gin.hpp
 * @brief Generic initial ideals, generic-section Hilbert functions, reduction
 *        numbers, initial-ideal dominance checks, and analytic spreads.
 *
 * Genericity over a finite field is probabilistic: independent random changes
 * of coordinates must agree, with a bounded number of reseeded retries before
 * an error. Failures surface as errors, never as silent wrong answers.
 */
#pragma once

#include <optional>
#include <span>

#include "ginred/grobner.hpp"
#include "ginred/hilbert.hpp"
#include "ginred/linear_map.hpp"
#include "ginred/monomial_ideal.hpp"
#include "ginred/ring_maps.hpp"
#include "ginred/rng.hpp"

namespace ginred {

inline Fp::Elem sample_element(const Fp& F, Rng& rng) { return rng.below(F.modulus()); }
inline mpq_class sample_element(const Rationals&, Rng& rng) {
    return mpq_class(static_cast<long>(rng.in_range(-9, 9)));
}

template <FieldContext K>
typename K::Elem sample_nonzero(const K& F, Rng& rng) {
    for (int i = 0; i < 256; ++i) {
        auto c = sample_element(F, rng);
        if (!F.is_zero(c)) return c;
    }
    throw GenericityError("could not sample a nonzero field element");
}

template <FieldContext K>
void require_homogeneous(std::span<const Poly<K>> gens) {
    for (const auto& g : gens) {
        if (g.is_zero()) throw Error("zero generator");
        if (!g.is_homogeneous()) throw Error("operation needs homogeneous generators");
        if (g.degree() == 0) throw Error("operation needs a proper ideal");
    }
}

/// Seeded invertible matrix; the same seed reproduces the same map.
template <FieldContext K>
LinearMap<K> random_change_of_coordinates(const RingPtr<K>& ring, std::uint64_t seed) {
    const K& F = ring->field;
    const int n = ring->nvars;
    Rng rng(seed);
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix<K> m(n, n, F.zero());
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c) m.at(r, c) = sample_element(F, rng);
        if (!F.is_zero(determinant(m, F))) return LinearMap<K>(ring, std::move(m));
    }
    throw GenericityError("random matrices stayed singular; field too small?");
}

struct GinResult {
    MonomialIdeal ideal{0};
    TermOrder order = TermOrder::degrevlex();
    std::vector<std::uint64_t> seeds;
    bool stable = false;
};

/// in_order(g(I)) for `trials` independent random g; all trials must agree.
/// Disagreement retries with fresh seeds up to a cap, then raises.
template <FieldContext K>
GinResult gin(const RingPtr<K>& ring, std::span<const Poly<K>> gens, const TermOrder& order,
              int trials, std::uint64_t seed, int degree_cap = 0) {
    if (trials < 2) throw Error("generic initial ideals need at least 2 trials");
    require_homogeneous(gens);
    for (int round = 0; round < 3; ++round) {
        std::vector<std::uint64_t> seeds;
        std::optional<MonomialIdeal> agreed;
        bool consistent = true;
        for (int t = 0; t < trials; ++t) {
            std::uint64_t s = mix_seed(seed, static_cast<std::uint64_t>(round) * 7919 + t);
            seeds.push_back(s);
            auto g = random_change_of_coordinates(ring, s);
            auto moved = g.apply(gens);
            auto in = initial_ideal(ring, std::span<const Poly<K>>(moved), order, degree_cap);
            if (!agreed)
                agreed = std::move(in);
            else if (!(in == *agreed)) {
                consistent = false;
                break;
            }
        }
        if (consistent) return {std::move(*agreed), order, std::move(seeds), true};
    }
    throw GenericityError(
        "generic initial ideal trials disagree: probable non-genericity (field too small or "
        "unlucky seeds)");
}

/// Hilbert function of R/(Gin_RL(I) + (x_{n-p+1}, ..., x_n)) up to D.
template <FieldContext K>
HilbertFunction generic_section_hilbert(const RingPtr<K>& ring, std::span<const Poly<K>> gens,
                                        int p, int D, std::uint64_t seed, int trials = 2) {
    if (p < 0 || p > ring->nvars) throw Error("section size out of range");
    GinResult g = gin(ring, gens, TermOrder::degrevlex(), trials, seed, D);
    return hilbert_function(g.ideal.add_coordinate_subspace(p), D);
}

/// Hilbert function of R/(I + (y_1, ..., y_p)) for seeded random linear forms,
/// via a direct Groebner basis; the independent witness for the generic-section route.
template <FieldContext K>
HilbertFunction direct_section_hilbert(const RingPtr<K>& ring, std::span<const Poly<K>> gens,
                                       int p, std::uint64_t seed, int D) {
    if (p < 0 || p > ring->nvars) throw Error("section size out of range");
    const K& F = ring->field;
    const int n = ring->nvars;
    Rng rng(mix_seed(seed, 0xd1ec7));
    std::vector<Poly<K>> all(gens.begin(), gens.end());
    for (int attempt = 0; attempt < 64; ++attempt) {
        Matrix<K> coeffs(p, n, F.zero());
        for (int r = 0; r < p; ++r)
            for (int c = 0; c < n; ++c) coeffs.at(r, c) = sample_element(F, rng);
        if (rank_of(coeffs, F) < p) continue;
        for (int r = 0; r < p; ++r) {
            std::vector<typename Poly<K>::Term> terms;
            for (int c = 0; c < n; ++c)
                if (!F.is_zero(coeffs.at(r, c)))
                    terms.push_back({Monomial::variable(n, c), coeffs.at(r, c)});
            all.push_back(Poly<K>::from_terms(ring, std::move(terms)));
        }
        return hilbert_function(initial_ideal(ring, std::span<const Poly<K>>(all),
                                              TermOrder::degrevlex(), D),
                                D);
    }
    throw GenericityError("could not sample independent linear forms");
}

/// Krull dimension of R/I through the degrevlex initial ideal.
template <FieldContext K>
int krull_dim(const RingPtr<K>& ring, std::span<const Poly<K>> gens) {
    return krull_dimension(initial_ideal(ring, gens, TermOrder::degrevlex()));
}

/// Largest k at which the Hilbert function of the generic Artinian reduction is
/// nonzero. The degree bound starts at n * (max generator degree) and doubles
/// once before giving up.
template <FieldContext K>
int reduction_number(const RingPtr<K>& ring, std::span<const Poly<K>> gens, std::uint64_t seed,
                     int bound = 0) {
    require_homogeneous(gens);
    int d = krull_dim(ring, gens);
    int maxdeg = 1;
    for (const auto& g : gens) maxdeg = std::max(maxdeg, g.degree());
    int D = bound > 0 ? bound : std::max(4, ring->nvars * maxdeg);
    for (int round = 0; round < 2; ++round) {
        HilbertFunction hf = generic_section_hilbert(ring, gens, d, D, seed);
        if (hf.last_nonzero() < hf.bound) return hf.last_nonzero();
        D *= 2;
    }
    throw BoundError("section Hilbert function still positive at degree " + std::to_string(D) +
                     "; enlarge the bound");
}

/// For a strongly stable ideal: the least k with x_{n-d}^{k+1} in the ideal,
/// d its Krull dimension. Agrees with reduction_number on such ideals.
inline int reduction_number_stable(const MonomialIdeal& I) {
    if (!is_strongly_stable(I)) throw Error("reduction_number_stable needs a strongly stable ideal");
    if (I.is_unit()) throw Error("unit ideal has no reduction number");
    if (I.is_zero()) return 0;
    int d = krull_dimension(I);
    int v = I.nvars() - d - 1;
    int least_power = -1;
    for (const auto& g : I.generators()) {
        if (g[v] != g.degree()) continue;  // not a pure power of x_v
        if (least_power < 0 || g.degree() < least_power) least_power = g.degree();
    }
    if (least_power < 0)
        throw Error("no pure power of the section variable; inconsistent stable ideal");
    return least_power - 1;
}

struct DominanceReport {
    int p = 0;
    int bound = 0;
    HilbertFunction lhs, rhs;           // sections of I and of in_tau(I)
    std::vector<bool> holds_per_degree;
    bool holds = true;
};

namespace gindetail {

template <FieldContext K>
DominanceReport dominance_from_sections(const RingPtr<K>& ring, std::span<const Poly<K>> gens,
                                        std::span<const Poly<K>> initial_gens, int p, int D,
                                        std::uint64_t seed) {
    DominanceReport rep;
    rep.p = p;
    rep.bound = D;
    rep.lhs = generic_section_hilbert(ring, gens, p, D, mix_seed(seed, 1));
    rep.rhs = generic_section_hilbert(ring, initial_gens, p, D, mix_seed(seed, 2));
    for (int j = 0; j <= D; ++j) {
        bool ok = rep.lhs[j] <= rep.rhs[j];
        rep.holds_per_degree.push_back(ok);
        rep.holds = rep.holds && ok;
    }
    return rep;
}

}  // namespace gindetail

/// Degreewise comparison of the Hilbert functions of R/(I + J) and
/// R/(in_tau(I) + J) for J generated by p generic linear forms.
template <FieldContext K>
DominanceReport dominance_check(const RingPtr<K>& ring, std::span<const Poly<K>> gens,
                                const TermOrder& tau, int p, int D, std::uint64_t seed) {
    MonomialIdeal in_tau = initial_ideal(ring, gens, tau, D);
    std::vector<Poly<K>> initial_gens = ideal_polys(ring, in_tau);
    return gindetail::dominance_from_sections(ring, gens, std::span<const Poly<K>>(initial_gens),
                                              p, D, seed);
}

/// Same comparison with the initial ideal taken for a positive weight vector.
template <FieldContext K>
DominanceReport dominance_check_weight(const RingPtr<K>& ring, std::span<const Poly<K>> gens,
                                       std::span<const long long> w, int p, int D,
                                       std::uint64_t seed) {
    std::vector<Poly<K>> forms = initial_ideal_weight(gens, w, D);
    return gindetail::dominance_from_sections(ring, gens, std::span<const Poly<K>>(forms), p, D,
                                              seed);
}

struct ReductionComparison {
    int r_ideal = 0;
    int r_initial = 0;
    bool holds = false;
};

/// r(R/I) <= r(R/in_tau(I)).
template <FieldContext K>
ReductionComparison vasconcelos_check(const RingPtr<K>& ring, std::span<const Poly<K>> gens,
                                      const TermOrder& tau, std::uint64_t seed) {
    ReductionComparison out;
    out.r_ideal = reduction_number(ring, gens, mix_seed(seed, 11));
    MonomialIdeal in_tau = initial_ideal(ring, gens, tau);
    std::vector<Poly<K>> initial_gens = ideal_polys(ring, in_tau);
    out.r_initial = reduction_number(ring, std::span<const Poly<K>>(initial_gens), mix_seed(seed, 12));
    out.holds = out.r_ideal <= out.r_initial;
    return out;
}

struct LexComparison {
    int r_ideal = 0;
    int r_lex = 0;
    bool holds = false;
    MonomialIdeal lex_ideal{0};
};

/// r(R/I) <= r(R/I^lex), with I^lex the lex-segment ideal of I's Hilbert function.
/// The construction bound adapts until the segment ideal stabilizes.
template <FieldContext K>
LexComparison lex_reduction_check(const RingPtr<K>& ring, std::span<const Poly<K>> gens,
                                  std::uint64_t seed) {
    require_homogeneous(gens);
    const int n = ring->nvars;
    MonomialIdeal in_rl = initial_ideal(ring, gens, TermOrder::degrevlex());
    int d = krull_dimension(in_rl);

    int D = in_rl.max_generator_degree() + n;
    for (int round = 0; round < 5; ++round) {
        HilbertFunction hf = hilbert_function(in_rl, D);
        std::vector<long long> dims;
        for (int j = 0; j <= D; ++j) dims.push_back(count_monomials(n, j) - hf[j]);
        MonomialIdeal L = lex_segment_ideal(n, dims);

        bool stabilized = L.max_generator_degree() <= D - n;
        bool dim_settled = krull_dimension(L) == d;
        int v = n - d - 1;
        bool power_found = d == n;
        if (!power_found)
            for (const auto& g : L.generators())
                if (g[v] == g.degree()) power_found = true;
        if (stabilized && dim_settled && power_found) {
            LexComparison out;
            out.r_ideal = reduction_number(ring, gens, mix_seed(seed, 21));
            out.r_lex = reduction_number_stable(L);
            out.holds = out.r_ideal <= out.r_lex;
            out.lex_ideal = std::move(L);
            return out;
        }
        D *= 2;
    }
    throw BoundError("lex-segment ideal did not stabilize; enlarge the degree bound");
}

namespace gindetail {

inline std::vector<std::string> fresh_names(const std::vector<std::string>& taken, int count,
                                            std::string stem) {
    auto collides = [&](const std::string& s) {
        for (const auto& t : taken)
            if (t == s) return true;
        return false;
    };
    bool clean = true;
    for (int k = 1; k <= count && clean; ++k)
        if (collides(stem + std::to_string(k))) clean = false;
    while (!clean) {
        stem = "_" + stem;
        clean = true;
        for (int k = 1; k <= count && clean; ++k)
            if (collides(stem + std::to_string(k))) clean = false;
    }
    std::vector<std::string> out;
    for (int k = 1; k <= count; ++k) out.push_back(stem + std::to_string(k));
    return out;
}

template <FieldContext K>
int dimension_of_quotient(const RingPtr<K>& ring, std::span<const Poly<K>> gens) {
    if (gens.empty()) return ring->nvars;
    return krull_dimension(initial_ideal(ring, gens, TermOrder::degrevlex()));
}

}  // namespace gindetail

/// Analytic spread: the Krull dimension of the fiber ring of I.
///
/// Equigenerated ideals use the subalgebra presentation directly: eliminate the
/// ring variables from (t_k - f_k). Other homogeneous ideals go through the
/// Rees presentation: eliminate the Rees parameter u from (T_k - u f_k), then
/// set the ring variables to zero in the kernel.
template <FieldContext K>
int analytic_spread(const RingPtr<K>& ring, std::span<const Poly<K>> gens) {
    require_homogeneous(gens);
    if (gens.empty()) throw Error("analytic spread of the zero ideal");
    const int n = ring->nvars;
    const int s = static_cast<int>(gens.size());
    const K& F = ring->field;

    bool equigenerated = true;
    for (const auto& g : gens)
        if (g.degree() != gens.front().degree()) equigenerated = false;

    auto tnames = gindetail::fresh_names(ring->names, s, "t");
    RingPtr<K> tring = make_ring(tnames, F);

    if (equigenerated) {
        RingPtr<K> ext = extended_ring(ring, {}, std::span<const std::string>(tnames));
        std::vector<Poly<K>> rels;
        for (int k = 0; k < s; ++k)
            rels.push_back(Poly<K>::var(ext, n + k) - transport(gens[static_cast<size_t>(k)], ext, 0));
        auto elim = eliminate(std::span<const Poly<K>>(rels), n);
        std::vector<Poly<K>> fiber;
        for (const auto& e : elim) fiber.push_back(restrict_tail(e, tring, n));
        return gindetail::dimension_of_quotient(tring, std::span<const Poly<K>>(fiber));
    }

    auto uname = gindetail::fresh_names(ring->names, 1, "u");
    RingPtr<K> ext = extended_ring(ring, std::span<const std::string>(uname),
                                   std::span<const std::string>(tnames));
    std::vector<Poly<K>> rels;
    for (int k = 0; k < s; ++k) {
        Poly<K> uf = Poly<K>::var(ext, 0) * transport(gens[static_cast<size_t>(k)], ext, 1);
        rels.push_back(Poly<K>::var(ext, 1 + n + k) - uf);
    }
    auto kernel = eliminate(std::span<const Poly<K>>(rels), 1);

    // fiber relations: kill the ring variables in the Rees kernel
    std::vector<Poly<K>> fiber;
    for (const auto& q : kernel) {
        std::vector<typename Poly<K>::Term> kept;
        for (const auto& t : q.terms()) {
            bool pure = true;
            for (int i = 1; i <= n && pure; ++i)
                if (t.mono[i] > 0) pure = false;
            if (pure) kept.push_back(t);
        }
        Poly<K> res = Poly<K>::from_terms(ext, std::move(kept));
        if (!res.is_zero()) fiber.push_back(restrict_tail(res, tring, 1 + n));
    }
    return gindetail::dimension_of_quotient(tring, std::span<const Poly<K>>(fiber));
}

}  // namespace ginred
