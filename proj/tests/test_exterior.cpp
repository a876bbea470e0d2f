// Exterior wedges: standard forms, supports, subspace initials, dominance checks.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ginred/exterior.hpp"
#include "ginred/parse.hpp"

using namespace ginred;

namespace {

RingPtr<Fp> ring3() { return make_ring({"x", "y", "z"}, Fp(32003)); }

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

// random independent family of `d` forms of degree `deg`
std::vector<Poly<Fp>> random_subspace(const RingPtr<Fp>& R, Rng& rng, int d, int deg) {
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

TermOrder random_order(Rng& rng, int n) {
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
            std::vector<int> perm;
            for (int i = 0; i < n; ++i) perm.push_back(i);
            for (int i = n - 1; i > 0; --i)
                std::swap(perm[static_cast<size_t>(i)],
                          perm[static_cast<size_t>(rng.below(static_cast<std::uint64_t>(i + 1)))]);
            return rng.below(2) == 0 ? TermOrder::permuted_lex(std::move(perm))
                                     : TermOrder::permuted_degrevlex(std::move(perm));
        }
    }
}

}  // namespace

TEST_CASE("standard forms") {
    auto lex = TermOrder::lex();

    SUBCASE("already standard") {
        auto sf = standard_form({mono({2, 0, 0}), mono({1, 1, 0})}, lex);
        REQUIRE(sf.has_value());
        CHECK(sf->second == 1);
        CHECK(sf->first.parts[0] == mono({2, 0, 0}));
    }

    SUBCASE("repeats vanish") {
        CHECK_FALSE(standard_form({mono({1, 1, 0}), mono({1, 1, 0})}, lex).has_value());
    }

    SUBCASE("one transposition flips the sign") {
        auto sf = standard_form({mono({0, 2, 0}), mono({1, 0, 1})}, lex);  // (y^2, xz)
        REQUIRE(sf.has_value());
        CHECK(sf->second == -1);
        CHECK(sf->first.parts[0] == mono({1, 0, 1}));
        CHECK(sf->first.parts[1] == mono({0, 2, 0}));
    }

    SUBCASE("sign is the permutation parity") {
        Rng rng(5);
        auto monos = monomials_of_degree(3, 2);
        for (int t = 0; t < 100; ++t) {
            // build a random permutation of a fixed descending triple
            std::vector<Monomial> parts{monos[0], monos[2], monos[4]};
            int sign = 1;
            for (int i = 2; i > 0; --i) {
                int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
                if (j != i) {
                    std::swap(parts[static_cast<size_t>(i)], parts[static_cast<size_t>(j)]);
                    sign = -sign;
                }
            }
            auto sf = standard_form(parts, lex);
            REQUIRE(sf.has_value());
            CHECK(sf->second == sign);
        }
    }

    CHECK_THROWS_AS(standard_form({mono({1, 0, 0}), mono({2, 0, 0})}, lex), Error);
}

TEST_CASE("exterior comparison") {
    auto lex = TermOrder::lex();
    ExtMonomial a{{mono({2, 0, 0}), mono({1, 1, 0})}};
    ExtMonomial b{{mono({2, 0, 0}), mono({0, 2, 0})}};
    CHECK(compare_exterior(lex, a, a) == Ordering::equal);
    CHECK(compare_exterior(lex, a, b) == Ordering::greater);

    SUBCASE("total order on all standard pairs in degree 2") {
        auto monos = monomials_of_degree(3, 2);
        std::vector<ExtMonomial> pairs;
        for (size_t i = 0; i < monos.size(); ++i)
            for (size_t j = 0; j < monos.size(); ++j) {
                if (i == j) continue;
                if (lex.greater(monos[i], monos[j])) pairs.push_back(ExtMonomial{{monos[i], monos[j]}});
            }
        CHECK(pairs.size() == 15);
        for (const auto& p : pairs)
            for (const auto& q : pairs) {
                Ordering pq = compare_exterior(lex, p, q);
                CHECK(static_cast<int>(compare_exterior(lex, q, p)) == -static_cast<int>(pq));
                if (pq == Ordering::equal) CHECK(p == q);
                for (const auto& r : pairs)
                    if (pq == Ordering::greater &&
                        compare_exterior(lex, q, r) == Ordering::greater)
                        CHECK(compare_exterior(lex, p, r) == Ordering::greater);
            }
    }
}

TEST_CASE("wedges of subspaces") {
    auto R = ring3();
    auto lex = TermOrder::lex();
    auto x = Poly<Fp>::var(R, 0), y = Poly<Fp>::var(R, 1), z = Poly<Fp>::var(R, 2);

    SUBCASE("monomial subspaces give a single standard monomial") {
        std::vector<Poly<Fp>> fam{x * x, x * y, y * z};
        auto w = wedge_of_subspace<Fp>(fam, lex);
        CHECK(w.support().size() == 1);
        CHECK(w.coefficients().begin()->second == 1);
    }

    SUBCASE("arity one is the polynomial itself") {
        std::vector<Poly<Fp>> fam{x * x + y * z};
        auto w = wedge_of_subspace<Fp>(fam, lex);
        CHECK(w.support().size() == 2);
    }

    SUBCASE("the worked two-dimensional example") {
        std::vector<Poly<Fp>> fam{x * x + y * z, x * y};
        auto w = wedge_of_subspace<Fp>(fam, lex);
        auto s = w.support();
        REQUIRE(s.size() == 2);
        ExtMonomial first{{mono({2, 0, 0}), mono({1, 1, 0})}};   // x^2 ^ xy
        ExtMonomial second{{mono({1, 1, 0}), mono({0, 1, 1})}};  // xy ^ yz
        CHECK(w.coefficients().count(first) == 1);
        CHECK(w.coefficients().count(second) == 1);
        // oracle: the 2x2 determinant expansion gives +1 and -1 after canonicalization
        const Fp& F = R->field;
        CHECK(F.equal(w.coefficients().at(first), F.one()));
        CHECK(F.equal(w.coefficients().at(second), F.from_int(-1)));
        CHECK(w.initial() == first);
    }

    SUBCASE("dependent families are rejected") {
        std::vector<Poly<Fp>> fam{x * x, x * x + x * y, x * y};
        CHECK_THROWS_AS(wedge_of_subspace<Fp>(fam, lex), Error);
    }

    SUBCASE("initial of the wedge matches row reduction") {
        std::vector<Poly<Fp>> fam{x * x + y * z, x * y};
        auto lead = initial_subspace<Fp>(fam, lex);
        auto w = wedge_of_subspace<Fp>(fam, lex);
        CHECK(w.initial().parts == lead);
    }

    SUBCASE("support and initial are basis-invariant") {
        Rng rng(9);
        for (int t = 0; t < 30; ++t) {
            auto fam = random_subspace(R, rng, 2, 2);
            auto w1 = wedge_of_subspace<Fp>(fam, lex);
            // invertible recombination
            const Fp& F = R->field;
            Fp::Elem a = 1 + rng.below(32002), b = rng.below(32003);
            Fp::Elem c = rng.below(32003), d = 1 + rng.below(32002);
            if (F.is_zero(F.sub(F.mul(a, d), F.mul(b, c)))) continue;
            std::vector<Poly<Fp>> fam2{fam[0].scale(a) + fam[1].scale(b),
                                       fam[0].scale(c) + fam[1].scale(d)};
            auto w2 = wedge_of_subspace<Fp>(fam2, lex);
            CHECK(w1 == w2);  // canonicalization pins the scalar
            CHECK(w1.initial() == w2.initial());
        }
    }

    SUBCASE("expansion guard") {
        std::vector<Poly<Fp>> big;
        Poly<Fp> dense(R);
        for (const auto& m : monomials_of_degree(3, 4)) dense = dense + Poly<Fp>::term(R, m, 1);
        for (int i = 0; i < 4; ++i) big.push_back(dense.scale(1 + static_cast<Fp::Elem>(i)));
        CHECK_THROWS_AS(wedge_of_subspace<Fp>(big, lex, 1000), Error);
    }
}

TEST_CASE("support re-expression under another order") {
    auto R = ring3();
    Rng rng(41);
    for (int t = 0; t < 25; ++t) {
        auto fam = random_subspace(R, rng, 2, 2);
        auto sigma = random_order(rng, 3);
        auto tau = random_order(rng, 3);
        auto under_sigma = wedge_of_subspace<Fp>(fam, sigma);
        auto re = under_sigma.restandardized(tau);
        auto direct = wedge_of_subspace<Fp>(fam, tau);
        // same element up to the canonical scalar: compare supports
        auto s1 = re.support();
        auto s2 = direct.support();
        REQUIRE(s1.size() == s2.size());
        for (size_t i = 0; i < s1.size(); ++i) CHECK(s1[i] == s2[i]);
    }
}

TEST_CASE("standardization dominance (exhaustive in degree 2)") {
    auto lex = TermOrder::lex();
    auto monos = monomials_of_degree(3, 2);

    SUBCASE("identity and reversal") {
        ExtMonomial m{{monos[0], monos[3]}};
        CHECK(check_standardization_dominance(m, std::vector<Monomial>{monos[0], monos[3]}, lex));
        CHECK(check_standardization_dominance(m, std::vector<Monomial>{monos[3], monos[0]}, lex));
    }

    SUBCASE("all dominated pairs") {
        long long cases = 0;
        for (size_t i = 0; i < monos.size(); ++i)
            for (size_t j = 0; j < monos.size(); ++j) {
                if (!lex.greater(monos[i], monos[j])) continue;
                ExtMonomial m{{monos[i], monos[j]}};
                for (const auto& q1 : monos)
                    for (const auto& q2 : monos) {
                        if (lex.greater(q1, monos[i]) || lex.greater(q2, monos[j])) continue;
                        ++cases;
                        CHECK(check_standardization_dominance(
                            m, std::vector<Monomial>{q1, q2}, lex));
                    }
            }
        CHECK(cases > 100);
    }
}

TEST_CASE("support dominance") {
    auto R = ring3();
    auto lex = TermOrder::lex();
    auto x = Poly<Fp>::var(R, 0), y = Poly<Fp>::var(R, 1), z = Poly<Fp>::var(R, 2);

    SUBCASE("monomial subspaces are vacuously dominated") {
        std::vector<Poly<Fp>> fam{x * x, y * z};
        CHECK(check_support_dominance<Fp>(fam, lex));
    }

    SUBCASE("the worked example") {
        std::vector<Poly<Fp>> fam{x * x + y * z, x * y};
        CHECK(check_support_dominance<Fp>(fam, lex));
    }

    SUBCASE("random subspaces under random orders") {
        Rng rng(61);
        for (int t = 0; t < 120; ++t) {
            int n = 2 + static_cast<int>(rng.below(3));
            auto Rn = make_ring(n, Fp(32003));
            int i = 1 + static_cast<int>(rng.below(3));
            int dim_ri = static_cast<int>(count_monomials(n, i));
            int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(4, dim_ri))));
            auto fam = random_subspace(Rn, rng, d, i);
            CHECK(check_support_dominance<Fp>(fam, random_order(rng, n)));
        }
    }
}

TEST_CASE("generic support containment and gin dominance") {
    auto R = ring3();
    auto lex = TermOrder::lex();
    auto rl = TermOrder::degrevlex();
    auto x = Poly<Fp>::var(R, 0), y = Poly<Fp>::var(R, 1), z = Poly<Fp>::var(R, 2);

    SUBCASE("monomial subspaces: W equals V") {
        std::vector<Poly<Fp>> fam{x * x, x * y};
        CHECK(check_generic_support_containment<Fp>(fam, lex, rl, 5));
        CHECK(check_gin_dominance<Fp>(fam, lex, rl, 5));
    }

    SUBCASE("the degree-2 part of the running example") {
        std::vector<Poly<Fp>> fam{x * x + y * z, x * y, x * z};
        CHECK(check_gin_dominance<Fp>(fam, rl, lex, 17, true));
    }

    SUBCASE("random instances") {
        Rng rng(71);
        for (int t = 0; t < 40; ++t) {
            int n = 2 + static_cast<int>(rng.below(3));
            auto Rn = make_ring(n, Fp(32003));
            int i = 1 + static_cast<int>(rng.below(3));
            int dim_ri = static_cast<int>(count_monomials(n, i));
            int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(std::min(4, dim_ri))));
            auto fam = random_subspace(Rn, rng, d, i);
            auto sigma = random_order(rng, n);
            auto tau = random_order(rng, n);
            CHECK(check_generic_support_containment<Fp>(fam, sigma, tau, rng.next()));
            CHECK(check_gin_dominance<Fp>(fam, sigma, tau, rng.next(), t % 8 == 0));
        }
    }
}
