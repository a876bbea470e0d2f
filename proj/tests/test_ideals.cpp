// Monomial-ideal combinatorics: Hilbert functions, dimension, stability,
// lex segments, polarization, generator counts.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ginred/generators.hpp"
#include "ginred/hilbert.hpp"
#include "ginred/monomial_ideal.hpp"
#include "ginred/parse.hpp"
#include "ginred/ring_maps.hpp"
#include "ginred/rng.hpp"

using namespace ginred;

namespace {

MonomialIdeal ideal_of(int n, std::vector<std::vector<int>> exps) {
    std::vector<Monomial> ms;
    for (auto& e : exps) ms.push_back(Monomial(std::move(e)));
    return MonomialIdeal::minimalize(n, std::move(ms));
}

MonomialIdeal random_monomial_ideal(Rng& rng, int n, int max_gens, int max_degree) {
    std::vector<Monomial> gens;
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_gens)));
    for (int k = 0; k < count; ++k) {
        int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree)));
        auto basis = monomials_of_degree(n, d);
        gens.push_back(basis[rng.below(basis.size())]);
    }
    return MonomialIdeal::minimalize(n, std::move(gens));
}

const MonomialIdeal remark_initial = ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 1}, {0, 1, 2}});

}  // namespace

TEST_CASE("minimalize") {
    CHECK(ideal_of(1, {{2}, {3}}) == ideal_of(1, {{2}}));
    CHECK(ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 2, 1}, {0, 1, 2}, {2, 1, 0}}) ==
          remark_initial);
    CHECK(remark_initial.generators().size() == 5);
    CHECK(MonomialIdeal(3).is_zero());
    CHECK(ideal_of(2, {{0, 0}}).is_unit());
}

TEST_CASE("containment") {
    auto I = ideal_of(3, {{2, 0, 0}});
    CHECK(I.contains(Monomial({2, 1, 0})));
    CHECK_FALSE(I.contains(Monomial({1, 1, 0})));
    CHECK(remark_initial.contains(Monomial({0, 2, 1})));
}

TEST_CASE("hilbert functions") {
    SUBCASE("zero ideal counts all monomials") {
        auto hf = hilbert_function(MonomialIdeal(3), 4);
        CHECK(hf.values == std::vector<long long>{1, 3, 6, 10, 15});
    }

    SUBCASE("the known lex initial ideal") {
        auto hf = hilbert_function(remark_initial, 6);
        CHECK(hf.values == std::vector<long long>{1, 3, 3, 2, 2, 2, 2});
    }

    SUBCASE("maximal ideal") {
        auto hf = hilbert_function(ideal_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}), 3);
        CHECK(hf.values == std::vector<long long>{1, 0, 0, 0});
    }

    SUBCASE("unit ideal is zero everywhere") {
        auto hf = hilbert_function(ideal_of(2, {{0, 0}}), 2);
        CHECK(hf.values == std::vector<long long>{0, 0, 0});
    }

    SUBCASE("enumeration and recursion agree on random ideals") {
        Rng rng(5);
        for (int t = 0; t < 60; ++t) {
            int n = 2 + static_cast<int>(rng.below(5));  // up to 6 variables
            auto I = random_monomial_ideal(rng, n, 6, 5);
            int D = 4 + static_cast<int>(rng.below(7));  // up to 10
            CHECK(hilbert_by_enumeration(I, D) == hilbert_by_recursion(I, D));
        }
    }
}

TEST_CASE("krull dimension") {
    CHECK(krull_dimension(MonomialIdeal(4)) == 4);
    CHECK(krull_dimension(ideal_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}})) == 0);
    CHECK(krull_dimension(remark_initial) == 1);
    CHECK(krull_dimension(ideal_of(2, {{0, 0}})) == -1);
}

TEST_CASE("strong stability") {
    CHECK(is_strongly_stable(ideal_of(2, {{2, 0}, {1, 1}, {0, 2}})));
    CHECK_FALSE(is_strongly_stable(ideal_of(2, {{1, 1}})));
    CHECK(is_strongly_stable(ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {0, 3, 0}})));
    CHECK(is_strongly_stable(MonomialIdeal(3)));

    SUBCASE("generator check matches the brute-force definition") {
        Rng rng(17);
        for (int t = 0; t < 80; ++t) {
            int n = 2 + static_cast<int>(rng.below(3));
            auto I = random_monomial_ideal(rng, n, 5, 4);
            bool by_gens = is_strongly_stable(I);
            // brute force: every monomial m in I, every i with x_i | m, every j < i
            bool brute = true;
            int top = I.max_generator_degree() + 1;
            for (int d = 1; d <= top && brute; ++d) {
                for (const auto& m : monomials_of_degree(n, d)) {
                    if (!I.contains(m)) continue;
                    for (int i = 1; i < n && brute; ++i) {
                        if (m[i] == 0) continue;
                        auto lowered = m.divide_by(Monomial::variable(n, i));
                        for (int j = 0; j < i; ++j)
                            if (!I.contains(lowered.times(Monomial::variable(n, j)))) brute = false;
                    }
                    if (!brute) break;
                }
            }
            CHECK(by_gens == brute);
        }
    }
}

TEST_CASE("lex segment predicate") {
    CHECK(is_lex_segment(ideal_of(2, {{1, 0}})));
    CHECK_FALSE(is_lex_segment(ideal_of(2, {{0, 1}})));
    CHECK(is_lex_segment(ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}, {0, 2, 1}})));
    CHECK_FALSE(is_lex_segment(remark_initial));

    SUBCASE("every lex segment is strongly stable") {
        Rng rng(23);
        for (int t = 0; t < 40; ++t) {
            int n = 2 + static_cast<int>(rng.below(3));
            int D = 2 + static_cast<int>(rng.below(3));
            // random attainable dimension sequence: grow a lex segment degree by degree
            std::vector<long long> dims(static_cast<size_t>(D) + 1, 0);
            for (int j = 1; j <= D; ++j) {
                long long total = count_monomials(n, j);
                long long lower = 0;
                if (j > 1 && dims[static_cast<size_t>(j - 1)] > 0) {
                    // Macaulay-safe floor: all variable multiples of the previous segment
                    auto prev = monomials_of_degree(n, j - 1);
                    std::set<std::vector<int>> grown;
                    for (long long k = 0; k < dims[static_cast<size_t>(j - 1)]; ++k)
                        for (int v = 0; v < n; ++v)
                            grown.insert(prev[static_cast<size_t>(k)]
                                             .times(Monomial::variable(n, v))
                                             .exponents());
                    lower = static_cast<long long>(grown.size());
                }
                dims[static_cast<size_t>(j)] = lower + static_cast<long long>(rng.below(
                                                           static_cast<std::uint64_t>(total - lower + 1)));
            }
            auto L = lex_segment_ideal(n, dims);
            CHECK(is_lex_segment(L));
            CHECK(is_strongly_stable(L));
        }
    }
}

TEST_CASE("lex segment construction") {
    SUBCASE("dimensions of the running example") {
        // dim I_j for I = (x^2 + yz, xy, xz): 0, 0, 3, 8, 13
        std::vector<long long> dims{0, 0, 3, 8, 13};
        auto L = lex_segment_ideal(3, dims);
        CHECK(L == ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}, {0, 2, 1}}));
        // HF(R/L) equals HF(R/I) degreewise
        auto hf = hilbert_function(L, 4);
        CHECK(hf.values == std::vector<long long>{1, 3, 3, 2, 2});
    }

    SUBCASE("idempotence on a lex segment's own dimensions") {
        auto L = ideal_of(3, {{2, 0, 0}, {1, 1, 0}, {1, 0, 1}, {0, 3, 0}, {0, 2, 1}});
        const int D = 5;
        auto hf = hilbert_function(L, D);
        std::vector<long long> dims;
        for (int j = 0; j <= D; ++j) dims.push_back(count_monomials(3, j) - hf[j]);
        CHECK(lex_segment_ideal(3, dims) == L);
    }

    SUBCASE("invalid dimension sequences are rejected") {
        CHECK_THROWS_AS(lex_segment_ideal(2, std::vector<long long>{0, 1, 0}), Error);
        CHECK_THROWS_AS(lex_segment_ideal(2, std::vector<long long>{0, 5}), Error);
    }
}

TEST_CASE("strongly stable sets meet lex segments on pure powers") {
    // for equal-size sets of degree-k monomials, V strongly stable and L a lex
    // segment: any pure power in L is already in V
    Rng rng(333);
    for (int trial = 0; trial < 60; ++trial) {
        int n = 2 + static_cast<int>(rng.below(3));
        int k = 2 + static_cast<int>(rng.below(3));
        auto all = monomials_of_degree(n, k);  // lex descending

        // grow a random strongly stable set: close random picks under exchanges
        std::set<std::vector<int>> V;
        int picks = 1 + static_cast<int>(rng.below(4));
        std::vector<Monomial> frontier;
        for (int t = 0; t < picks; ++t) frontier.push_back(all[rng.below(all.size())]);
        while (!frontier.empty()) {
            Monomial m = frontier.back();
            frontier.pop_back();
            if (!V.insert(m.exponents()).second) continue;
            for (int i = 1; i < n; ++i) {
                if (m[i] == 0) continue;
                for (int j = 0; j < i; ++j)
                    frontier.push_back(
                        m.divide_by(Monomial::variable(n, i)).times(Monomial::variable(n, j)));
            }
        }

        // lex segment of the same size
        size_t size = V.size();
        REQUIRE(size <= all.size());
        std::set<std::vector<int>> L;
        for (size_t t = 0; t < size; ++t) L.insert(all[t].exponents());

        for (int i = 0; i < n; ++i) {
            std::vector<int> pure(static_cast<size_t>(n), 0);
            pure[static_cast<size_t>(i)] = k;
            if (L.count(pure)) CHECK(V.count(pure));
        }
    }
}

TEST_CASE("coordinate subspace sums") {
    auto I = ideal_of(3, {{0, 2, 1}, {0, 1, 2}});
    CHECK(I.add_coordinate_subspace(0) == I);
    CHECK(I.add_coordinate_subspace(3) ==
          ideal_of(3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
    // both generators divide by z, so adding (z) swallows them
    CHECK(I.add_coordinate_subspace(1) == ideal_of(3, {{0, 0, 1}}));
    CHECK_THROWS_AS(I.add_coordinate_subspace(4), Error);
}

TEST_CASE("max variable and the degrevlex comparison") {
    CHECK(Monomial({2, 0, 1}).max_variable() == 2);
    CHECK(Monomial({5, 0, 0, 0}).max_variable() == 0);

    // same-degree m >= n in degrevlex forces max(m) <= max(n); exhaustive check
    auto rl = TermOrder::degrevlex();
    for (int n = 2; n <= 4; ++n)
        for (int d = 1; d <= 4; ++d) {
            auto monos = monomials_of_degree(n, d);
            for (const auto& a : monos)
                for (const auto& b : monos)
                    if (rl.geq(a, b)) CHECK(a.max_variable() <= b.max_variable());
        }
}

TEST_CASE("polarization") {
    SUBCASE("one square becomes a product of two variables") {
        auto P = polarize(ideal_of(1, {{2}}), std::vector<std::string>{"x"});
        CHECK(P.ideal == ideal_of(2, {{1, 1}}));
        CHECK(P.names == std::vector<std::string>{"x", "x_1"});
        CHECK(P.origin[1] == std::pair<int, int>{0, 1});
    }

    SUBCASE("squarefree ideals are fixed") {
        auto I = ideal_of(3, {{1, 1, 0}, {0, 1, 1}});
        auto P = polarize(I, std::vector<std::string>{"x", "y", "z"});
        CHECK(P.ideal == I);
    }

    SUBCASE("partial polarization of the four-variable example") {
        auto parsed = parse_ideal_text(
            "ring x1,x2,x3,x4; char 32003; ideal x4^2, x1*x3^3, x3^3*x4, x2^3*x4, x2*x3^3, "
            "x2^2*x3, x1^2*x3^2, x1^4, x1*x2^2*x4, x2^4");
        auto [R, gens] = materialize(parsed, Fp(32003));
        std::vector<Monomial> monos;
        for (const auto& g : gens) monos.push_back(g.terms().front().mono);
        auto I = MonomialIdeal::minimalize(4, monos);

        std::vector<int> which{3};  // x4 only
        auto P = polarize(I, R->names, which);
        REQUIRE(P.names.size() == 5);
        auto expected_parsed = parse_ideal_text(
            "ring x1,x2,x3,x4,x5; char 32003; ideal x4*x5, x1*x3^3, x3^3*x4, x2^3*x4, x2*x3^3, "
            "x2^2*x3, x1^2*x3^2, x1^4, x1*x2^2*x4, x2^4");
        auto [R5, gens5] = materialize(expected_parsed, Fp(32003));
        std::vector<Monomial> expected;
        for (const auto& g : gens5) expected.push_back(g.terms().front().mono);
        CHECK(P.ideal == MonomialIdeal::minimalize(5, expected));
    }

    SUBCASE("full polarization is squarefree and keeps generator counts by degree") {
        Rng rng(31);
        for (int t = 0; t < 30; ++t) {
            int n = 2 + static_cast<int>(rng.below(3));
            auto I = random_monomial_ideal(rng, n, 5, 4);
            auto P = polarize(I, default_names(n));
            for (const auto& g : P.ideal.generators())
                for (int i = 0; i < g.nvars(); ++i) CHECK(g[i] <= 1);
            int top = I.max_generator_degree();
            CHECK(generator_degree_counts(I, top) == generator_degree_counts(P.ideal, top));
        }
    }
}

TEST_CASE("minimal generator counts by exact rank") {
    auto parsed = parse_ideal_text("ring x,y,z; char 32003; ideal x^2 + y*z, x*y, x*z");
    auto [R, gens] = materialize(parsed, Fp(32003));

    SUBCASE("principal ideal") {
        std::vector<Poly<Fp>> one{gens[0]};
        CHECK(minimal_generator_counts<Fp>(one, 4) == std::vector<long long>{0, 0, 1, 0, 0});
    }

    SUBCASE("adding a seeded random linear form") {
        Rng rng(1234);
        std::vector<Poly<Fp>::Term> lt;
        for (int i = 0; i < 3; ++i)
            lt.push_back({Monomial::variable(3, i), 1 + rng.below(32002)});
        auto L = Poly<Fp>::from_terms(R, std::move(lt));

        auto with_l = gens;
        with_l.push_back(L);
        CHECK(minimal_generator_counts<Fp>(with_l, 2) == std::vector<long long>{0, 1, 3});

        // the lex initial ideal drops a degree-2 generator after the section
        auto in_gens = ideal_polys(R, remark_initial);
        in_gens.push_back(L);
        CHECK(minimal_generator_counts<Fp>(in_gens, 2) == std::vector<long long>{0, 1, 2});
    }

    SUBCASE("agrees with direct counting on monomial ideals") {
        Rng rng(777);
        for (int t = 0; t < 20; ++t) {
            int n = 2 + static_cast<int>(rng.below(2));
            auto I = random_monomial_ideal(rng, n, 4, 4);
            auto Rn = make_ring(n, Fp(32003));
            int top = I.max_generator_degree();
            CHECK(minimal_generator_counts<Fp>(ideal_polys(Rn, I), top) ==
                  generator_degree_counts(I, top));
        }
    }
}
