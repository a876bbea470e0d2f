/**
 * @file verify.hpp
 * @brief Randomized verification suites over seeded corpora, plus the
 *        hardcoded worked examples shipped as ideal files.
 */
#pragma once

#include <functional>
#include <numeric>

#include "ginred/corpus.hpp"
#include "ginred/exterior.hpp"
#include "ginred/generators.hpp"
#include "ginred/report.hpp"

namespace ginred {

struct VerifyResult {
    std::string name;
    int total = 0;
    int failures = 0;
    bool report_only = false;
    std::vector<std::string> failing_cases;
    nlohmann::json details = nlohmann::json::object();

    bool passed() const { return report_only || failures == 0; }

    void record(const std::string& case_name, bool ok) {
        ++total;
        if (!ok) {
            ++failures;
            if (failing_cases.size() < 25) failing_cases.push_back(case_name);
        }
    }

    nlohmann::json summary() const {
        return {{"suite", name},
                {"total", total},
                {"failures", failures},
                {"reportOnly", report_only},
                {"failingCases", failing_cases},
                {"details", details}};
    }
};

namespace verifydetail {

inline TermOrder random_order(Rng& rng, int n) {
    switch (rng.below(4)) {
        case 0:
            return TermOrder::lex();
        case 1:
            return TermOrder::degrevlex();
        case 2: {
            std::vector<long long> w;
            for (int i = 0; i < n; ++i) w.push_back(1 + static_cast<long long>(rng.below(4)));
            return TermOrder::weighted(std::move(w));
        }
        default: {
            std::vector<int> perm(static_cast<size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[static_cast<size_t>(i)],
                          perm[static_cast<size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
            return rng.below(2) == 0 ? TermOrder::permuted_lex(std::move(perm))
                                     : TermOrder::permuted_degrevlex(std::move(perm));
        }
    }
}

inline std::vector<Poly<Fp>> random_subspace(const RingPtr<Fp>& R, Rng& rng, int d, int deg) {
    auto basis = monomials_of_degree(R->nvars, deg);
    while (true) {
        std::vector<Poly<Fp>> fam;
        for (int k = 0; k < d; ++k) {
            std::vector<Poly<Fp>::Term> terms;
            for (const auto& m : basis)
                if (rng.below(2) == 0) terms.push_back({m, 1 + rng.below(32002)});
            fam.push_back(Poly<Fp>::from_terms(R, std::move(terms)));
        }
        bool ok = true;
        for (const auto& f : fam) ok = ok && !f.is_zero();
        if (ok && independent<Fp>(fam)) return fam;
    }
}

inline std::vector<long long> random_weights(Rng& rng, int n) {
    std::vector<long long> w;
    for (int i = 0; i < n; ++i) w.push_back(1 + static_cast<long long>(rng.below(4)));
    return w;
}

}  // namespace verifydetail

/// Dominance of section Hilbert functions under lex, degrevlex, and one random
/// positive weight vector, for all section sizes p and all degrees up to D.
template <FieldContext K>
VerifyResult verify_thm11(const CorpusSpec& spec, int D, K field) {
    spec.validate();
    VerifyResult out;
    out.name = "thm11";
    for (int idx = 0; idx < spec.count; ++idx) {
        CorpusIdeal<K> ci = corpus_ideal(spec, idx, field);
        const int n = ci.ring->nvars;
        Rng rng(mix_seed(ci.seed, 0xdead));

        GinResult gin_lhs =
            gin(ci.ring, std::span<const Poly<K>>(ci.gens), TermOrder::degrevlex(), 2,
                mix_seed(ci.seed, 101), D);

        auto check_rhs = [&](const std::string& label, std::span<const Poly<K>> initial_gens) {
            GinResult gin_rhs = gin(ci.ring, initial_gens, TermOrder::degrevlex(), 2,
                                    mix_seed(ci.seed, std::hash<std::string>{}(label)), D);
            for (int p = 0; p <= n; ++p) {
                HilbertFunction lhs = hilbert_function(gin_lhs.ideal.add_coordinate_subspace(p), D);
                HilbertFunction rhs = hilbert_function(gin_rhs.ideal.add_coordinate_subspace(p), D);
                bool ok = true;
                for (int j = 0; j <= D; ++j) ok = ok && lhs[j] <= rhs[j];
                out.record("ideal " + std::to_string(idx) + " tau=" + label +
                               " p=" + std::to_string(p),
                           ok);
            }
        };

        for (const auto& tau : {TermOrder::lex(), TermOrder::degrevlex()}) {
            MonomialIdeal in_tau = initial_ideal(ci.ring, std::span<const Poly<K>>(ci.gens), tau, D);
            auto rhs = ideal_polys(ci.ring, in_tau);
            check_rhs(tau.describe(), std::span<const Poly<K>>(rhs));
        }
        auto w = verifydetail::random_weights(rng, n);
        auto forms = initial_ideal_weight(std::span<const Poly<K>>(ci.gens), w, D);
        std::string wlabel = TermOrder::weighted(w).describe();
        check_rhs(wlabel, std::span<const Poly<K>>(forms));
    }
    return out;
}

/// Generic-section route equals the direct-section route, all p, two seeds each.
template <FieldContext K>
VerifyResult verify_lemma12(const CorpusSpec& spec, int D, K field) {
    spec.validate();
    VerifyResult out;
    out.name = "lemma12";
    for (int idx = 0; idx < spec.count; ++idx) {
        CorpusIdeal<K> ci = corpus_ideal(spec, idx, field);
        const int n = ci.ring->nvars;
        for (int variant = 0; variant < 2; ++variant) {
            GinResult g = gin(ci.ring, std::span<const Poly<K>>(ci.gens), TermOrder::degrevlex(),
                              2, mix_seed(ci.seed, 300 + static_cast<std::uint64_t>(variant)), D);
            for (int p = 0; p <= n; ++p) {
                HilbertFunction generic = hilbert_function(g.ideal.add_coordinate_subspace(p), D);
                HilbertFunction direct = direct_section_hilbert(
                    ci.ring, std::span<const Poly<K>>(ci.gens), p,
                    mix_seed(ci.seed, 500 + static_cast<std::uint64_t>(variant)), D);
                out.record("ideal " + std::to_string(idx) + " seed" + std::to_string(variant) +
                               " p=" + std::to_string(p),
                           generic == direct);
            }
        }
    }
    return out;
}

/// Exhaustive standardization dominance for n = 3, degree 2, arity 2.
inline VerifyResult verify_lemma13() {
    VerifyResult out;
    out.name = "lemma13";
    auto monos = monomials_of_degree(3, 2);
    for (const auto& sigma : {TermOrder::lex(), TermOrder::degrevlex()}) {
        for (size_t i = 0; i < monos.size(); ++i)
            for (size_t j = 0; j < monos.size(); ++j) {
                if (!sigma.greater(monos[i], monos[j])) continue;
                ExtMonomial m{{monos[i], monos[j]}};
                for (const auto& q1 : monos)
                    for (const auto& q2 : monos) {
                        if (sigma.greater(q1, monos[i]) || sigma.greater(q2, monos[j])) continue;
                        bool ok = check_standardization_dominance(
                            m, std::vector<Monomial>{q1, q2}, sigma);
                        out.record(sigma.describe() + " m=(" + std::to_string(i) + "," +
                                       std::to_string(j) + ")",
                                   ok);
                    }
            }
    }
    return out;
}

namespace verifydetail {

struct WedgeInstance {
    RingPtr<Fp> ring;
    std::vector<Poly<Fp>> family;
    TermOrder sigma = TermOrder::degrevlex();
    TermOrder tau = TermOrder::lex();
    std::uint64_t seed = 0;
};

inline WedgeInstance wedge_instance(std::uint64_t seed, int index) {
    Rng rng(mix_seed(seed, static_cast<std::uint64_t>(index)));
    int n = 2 + static_cast<int>(rng.below(3));  // up to 4 variables
    auto ring = make_ring(n, Fp(32003));
    int i = 1 + static_cast<int>(rng.below(3));  // degree up to 3
    int dim_ri = static_cast<int>(count_monomials(n, i));
    int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(4, dim_ri))));
    auto fam = random_subspace(ring, rng, d, i);
    return {ring, std::move(fam), random_order(rng, n), random_order(rng, n), rng.next()};
}

}  // namespace verifydetail

inline VerifyResult verify_lemma14(int count, std::uint64_t seed) {
    VerifyResult out;
    out.name = "lemma14";
    for (int k = 0; k < count; ++k) {
        auto inst = verifydetail::wedge_instance(mix_seed(seed, 14), k);
        out.record("instance " + std::to_string(k),
                   check_support_dominance<Fp>(inst.family, inst.sigma));
    }
    return out;
}

inline VerifyResult verify_lemma15(int count, std::uint64_t seed) {
    VerifyResult out;
    out.name = "lemma15";
    for (int k = 0; k < count; ++k) {
        auto inst = verifydetail::wedge_instance(mix_seed(seed, 15), k);
        out.record("instance " + std::to_string(k),
                   check_generic_support_containment<Fp>(inst.family, inst.sigma, inst.tau,
                                                         inst.seed));
    }
    return out;
}

inline VerifyResult verify_cor16(int count, std::uint64_t seed) {
    VerifyResult out;
    out.name = "cor16";
    for (int k = 0; k < count; ++k) {
        auto inst = verifydetail::wedge_instance(mix_seed(seed, 16), k);
        out.record("instance " + std::to_string(k),
                   check_gin_dominance<Fp>(inst.family, inst.sigma, inst.tau, inst.seed,
                                           k % 8 == 0));
    }
    return out;
}

/// r(R/I) <= r(R/I^lex) over a corpus. Characteristic zero asserts; finite
/// characteristic runs report-only.
template <FieldContext K>
VerifyResult verify_prop21(const CorpusSpec& spec, K field) {
    spec.validate();
    VerifyResult out;
    out.name = "prop21";
    out.report_only = field.characteristic() != 0;
    int observed_violations = 0;
    int indeterminate = 0;
    for (int idx = 0; idx < spec.count; ++idx) {
        CorpusIdeal<K> ci = corpus_ideal(spec, idx, field);
        try {
            LexComparison c = lex_reduction_check(ci.ring, std::span<const Poly<K>>(ci.gens),
                                                  mix_seed(ci.seed, 21));
            if (!c.holds) ++observed_violations;
            out.record("ideal " + std::to_string(idx) + " r=" + std::to_string(c.r_ideal) +
                           " rLex=" + std::to_string(c.r_lex),
                       c.holds);
        } catch (const Error& e) {
            // small fields routinely break genericity; report, do not assert
            if (!out.report_only) throw;
            ++indeterminate;
            out.record("ideal " + std::to_string(idx) + " indeterminate: " + e.what(), true);
        }
    }
    out.details["observedViolations"] = observed_violations;
    out.details["indeterminate"] = indeterminate;
    if (out.report_only)
        out.details["note"] = "finite characteristic: inequality reported, not asserted";
    return out;
}

/// Consistency of the two reduction-number routes on strongly stable gins.
template <FieldContext K>
VerifyResult verify_stable_agreement(const CorpusSpec& spec, K field) {
    spec.validate();
    VerifyResult out;
    out.name = "stable-agreement";
    for (int idx = 0; idx < spec.count; ++idx) {
        CorpusIdeal<K> ci = corpus_ideal(spec, idx, field);
        GinResult g = gin(ci.ring, std::span<const Poly<K>>(ci.gens), TermOrder::degrevlex(), 2,
                          mix_seed(ci.seed, 33));
        if (!is_strongly_stable(g.ideal)) {
            out.record("ideal " + std::to_string(idx) + " gin not strongly stable", false);
            continue;
        }
        int via_stable = reduction_number_stable(g.ideal);
        int via_generic =
            reduction_number(ci.ring, std::span<const Poly<K>>(ci.gens), mix_seed(ci.seed, 34));
        out.record("ideal " + std::to_string(idx), via_stable == via_generic);
    }
    return out;
}

// ---------------------------------------------------------------------------
// worked examples, shipped as ideal files
// ---------------------------------------------------------------------------

namespace verifydetail {

inline std::pair<RingPtr<Fp>, std::vector<Poly<Fp>>> load_file(const std::string& path) {
    return materialize(parse_ideal_file(path), Fp(32003));
}

// 2-minors of the generic symmetric 3x3 matrix in variables
// x11, x12, x13, x22, x23, x33, together with their main-diagonal products.
inline std::pair<std::vector<Poly<Fp>>, std::vector<Monomial>> symmetric_minors(
    const RingPtr<Fp>& R) {
    auto entry = [&](int i, int j) {
        static const int idx[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
        return idx[i][j];
    };
    std::vector<std::pair<int, int>> pairs{{0, 1}, {0, 2}, {1, 2}};
    std::vector<Poly<Fp>> minors;
    std::vector<Monomial> diagonals;
    for (size_t a = 0; a < pairs.size(); ++a) {
        for (size_t b = a; b < pairs.size(); ++b) {
            auto [r1, r2] = pairs[a];
            auto [c1, c2] = pairs[b];
            auto m = [&](int i, int j) { return Poly<Fp>::var(R, entry(i, j)); };
            minors.push_back(m(r1, c1) * m(r2, c2) - m(r1, c2) * m(r2, c1));
            diagonals.push_back(Monomial::variable(6, entry(r1, c1))
                                    .times(Monomial::variable(6, entry(r2, c2))));
        }
    }
    return {std::move(minors), std::move(diagonals)};
}

/// A permuted-lex order under which every minor leads with its diagonal product.
inline TermOrder diagonal_order(std::span<const Poly<Fp>> minors,
                                std::span<const Monomial> diagonals) {
    std::vector<int> perm(6);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        TermOrder t = TermOrder::permuted_lex(perm);
        bool ok = true;
        for (size_t k = 0; k < minors.size() && ok; ++k)
            if (!(minors[k].leading_term(t).mono == diagonals[k])) ok = false;
        if (ok) return t;
    } while (std::next_permutation(perm.begin(), perm.end()));
    throw Error("no diagonal permuted-lex order exists for these minors");
}

inline std::vector<Poly<Fp>> random_quadrics(const RingPtr<Fp>& R, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<Poly<Fp>> out;
    for (int k = 0; k < 2; ++k) {
        std::vector<Poly<Fp>::Term> terms;
        for (const auto& m : monomials_of_degree(3, 2)) terms.push_back({m, 1 + rng.below(32002)});
        out.push_back(Poly<Fp>::from_terms(R, std::move(terms)));
    }
    return out;
}

}  // namespace verifydetail

/// Reproduces every number reported in the worked examples: the lex initial
/// ideal and generator counts of the 3-variable example, the reduction numbers
/// of the 4-variable ideal, its partial polarization and lex-segment ideal, the
/// non-zero-divisor section, and both analytic-spread examples.
inline VerifyResult verify_paper_examples(const std::string& data_dir) {
    using namespace verifydetail;
    VerifyResult out;
    out.name = "paper-examples";

    {  // lex initial ideal of (x^2 + yz, xy, xz)
        auto [R, gens] = load_file(data_dir + "/remark18.ideal");
        MonomialIdeal expected = MonomialIdeal::minimalize(
            3, {Monomial({2, 0, 0}), Monomial({1, 1, 0}), Monomial({1, 0, 1}), Monomial({0, 2, 1}),
                Monomial({0, 1, 2})});
        out.record("remark18 lex initial ideal",
                   initial_ideal<Fp>(std::span<const Poly<Fp>>(gens), TermOrder::lex()) == expected);

        // generator counts after adding a seeded random linear form
        Rng rng(mix_seed(18, 1));
        std::vector<Poly<Fp>::Term> lterms;
        for (int i = 0; i < 3; ++i)
            lterms.push_back({Monomial::variable(3, i), 1 + rng.below(32002)});
        auto L = Poly<Fp>::from_terms(R, std::move(lterms));
        auto with_l = gens;
        with_l.push_back(L);
        auto counts = minimal_generator_counts<Fp>(with_l, 2);
        out.record("remark18 generators of I + (L)",
                   counts == std::vector<long long>{0, 1, 3});
        auto in_with_l = ideal_polys(R, expected);
        in_with_l.push_back(L);
        auto counts_in = minimal_generator_counts<Fp>(in_with_l, 2);
        out.record("remark18 generators of in(I) + (L)",
                   counts_in == std::vector<long long>{0, 1, 2});
    }

    {  // reduction numbers of the 4-variable ideal and its relatives
        auto [R4, gens4] = load_file(data_dir + "/sec2-I.ideal");
        out.record("sec2 r(R/I) = 4",
                   reduction_number(R4, std::span<const Poly<Fp>>(gens4), mix_seed(2, 1)) == 4);

        // partial polarization with respect to x4 matches the shipped 5-variable ideal
        std::vector<Monomial> monos4;
        for (const auto& g : gens4) monos4.push_back(g.terms().front().mono);
        auto I = MonomialIdeal::minimalize(4, monos4);
        std::vector<int> which{3};
        auto P = polarize(I, R4->names, which);
        auto [R5, gens5] = load_file(data_dir + "/sec2-I1.ideal");
        std::vector<Monomial> monos5;
        for (const auto& g : gens5) monos5.push_back(g.terms().front().mono);
        out.record("sec2 polarization w.r.t. x4 equals I1",
                   P.ideal == MonomialIdeal::minimalize(5, monos5));

        out.record("sec2 r(S/I1) = 3",
                   reduction_number(R5, std::span<const Poly<Fp>>(gens5), mix_seed(2, 2)) == 3);

        LexComparison lc = lex_reduction_check(R4, std::span<const Poly<Fp>>(gens4), mix_seed(2, 3));
        out.record("sec2 r(R/I^lex) = 5", lc.r_lex == 5 && lc.holds);

        // z = x4 - x5 is a section: r(S/I1) = 3 but r(S/(I1 + z)) = 4
        auto with_z = gens5;
        with_z.push_back(Poly<Fp>::var(R5, 3) - Poly<Fp>::var(R5, 4));
        out.record("sec2 r(S/(I1 + z)) = 4",
                   reduction_number(R5, std::span<const Poly<Fp>>(with_z), mix_seed(2, 4)) == 4);
    }

    {  // analytic spreads: symmetric 2-minors under a verified diagonal order
        auto R = make_ring({"x11", "x12", "x13", "x22", "x23", "x33"}, Fp(32003));
        auto [minors, diagonals] = symmetric_minors(R);

        // the shipped file carries the same six minors
        auto [Rf, file_minors] = load_file(data_dir + "/remark19-symmetric.ideal");
        bool same = file_minors.size() == minors.size();
        for (size_t k = 0; same && k < minors.size(); ++k)
            same = file_minors[k] == minors[k];
        out.record("remark19 symmetric minors file matches construction", same);

        TermOrder diag = diagonal_order(minors, diagonals);
        out.record("remark19 spread of the minor ideal is 6",
                   analytic_spread<Fp>(R, minors) == 6);
        auto in_diag = initial_ideal<Fp>(std::span<const Poly<Fp>>(minors), diag);
        out.record("remark19 diagonal initial ideal is the six diagonals",
                   in_diag == MonomialIdeal::minimalize(6, {diagonals.begin(), diagonals.end()}));
        auto in_polys = ideal_polys(R, in_diag);
        out.record("remark19 spread of the diagonal initial ideal is 5",
                   analytic_spread<Fp>(R, std::span<const Poly<Fp>>(in_polys)) == 5);
    }

    {  // analytic spreads: two generic quadrics in three variables
        auto [R, quadrics] = load_file(data_dir + "/remark19-quadrics.ideal");
        out.record("remark19 spread of two quadrics is 2",
                   analytic_spread<Fp>(R, std::span<const Poly<Fp>>(quadrics)) == 2);
        auto in_lex = initial_ideal<Fp>(std::span<const Poly<Fp>>(quadrics), TermOrder::lex());
        auto in_polys = ideal_polys(R, in_lex);
        out.record("remark19 spread of the lex initial ideal is 3",
                   analytic_spread<Fp>(R, std::span<const Poly<Fp>>(in_polys)) == 3);

        // corroborate genericity with a second seeded realization
        auto fresh = verifydetail::random_quadrics(R, mix_seed(19, 2));
        out.record("remark19 second seed corroborates the spreads",
                   analytic_spread<Fp>(R, std::span<const Poly<Fp>>(fresh)) == 2 &&
                       analytic_spread<Fp>(
                           R, std::span<const Poly<Fp>>(ideal_polys(
                                  R, initial_ideal<Fp>(std::span<const Poly<Fp>>(fresh),
                                                       TermOrder::lex())))) == 3);
    }

    return out;
}

}  // namespace ginred
