// Fields, monomials, term orders, polynomial arithmetic, linear maps, parsing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ginred/linear_map.hpp"
#include "ginred/parse.hpp"
#include "ginred/polynomial.hpp"
#include "ginred/rng.hpp"

using namespace ginred;

namespace {

Monomial mono(std::vector<int> e) { return Monomial(std::move(e)); }

RingPtr<Fp> ring3() { return make_ring({"x", "y", "z"}, Fp(32003)); }

}  // namespace

TEST_CASE("prime field arithmetic") {
    Fp F(32003);
    CHECK(F.add(32000, 5) == 2);
    CHECK(F.sub(3, 5) == 32001);
    CHECK(F.mul(F.from_int(-1), F.from_int(-1)) == 1);
    CHECK(F.from_fraction(1, 2) == F.inv(2));

    SUBCASE("Fermat: a^(p-1) = 1 for random nonzero a") {
        Rng rng(7);
        for (int t = 0; t < 50; ++t) {
            Fp::Elem a = 1 + rng.below(32002);
            CHECK(F.pow(a, 32002) == 1);
            CHECK(F.mul(a, F.inv(a)) == 1);
        }
    }

    SUBCASE("rejects non-prime and even characteristic") {
        CHECK_THROWS_AS(Fp(32001), Error);  // 3 * 10667
        CHECK_THROWS_AS(Fp(2), Error);
    }
}

TEST_CASE("rational field stays reduced") {
    Rationals Q;
    auto q = Q.from_fraction(4, -6);
    CHECK(q == mpq_class(-2, 3));
    CHECK(Q.str(q) == "-2/3");
    CHECK(Q.mul(q, Q.inv(q)) == 1);
}

TEST_CASE("monomial basics") {
    auto m = mono({2, 0, 1});
    CHECK(m.degree() == 3);
    CHECK(m.max_variable() == 2);
    CHECK(mono({5, 0, 0}).max_variable() == 0);
    CHECK_THROWS_AS(Monomial(3).max_variable(), Error);
    CHECK(mono({1, 1, 0}).divides(mono({2, 1, 0})));
    CHECK_FALSE(mono({1, 1, 0}).divides(mono({0, 3, 0})));
    CHECK(lcm(mono({3, 2, 0}), mono({1, 4, 2})) == mono({3, 4, 2}));
    CHECK(gcd(mono({3, 2, 0}), mono({1, 4, 2})) == mono({1, 2, 0}));
    CHECK(count_monomials(3, 2) == 6);
    CHECK(monomials_of_degree(3, 2).size() == 6);
    // lex-descending enumeration
    CHECK(monomials_of_degree(3, 2).front() == mono({2, 0, 0}));
    CHECK(monomials_of_degree(3, 2).back() == mono({0, 0, 2}));
}

TEST_CASE("term order comparisons") {
    auto xz = mono({1, 0, 1});
    auto yy = mono({0, 2, 0});

    CHECK(TermOrder::lex().compare(xz, yy) == Ordering::greater);
    CHECK(TermOrder::degrevlex().compare(xz, yy) == Ordering::less);
    CHECK(TermOrder::weighted({1, 1, 1}).compare(xz, yy) ==
          TermOrder::degrevlex().compare(xz, yy));
    CHECK(TermOrder::weighted({3, 1, 1}).compare(xz, yy) == Ordering::greater);

    SUBCASE("weights must be positive") {
        CHECK_THROWS_AS(TermOrder::weighted({1, 0, 1}), Error);
        CHECK_THROWS_AS(TermOrder::weighted({1, -2, 1}), Error);
    }

    SUBCASE("permuted order relabels variables") {
        // treat z as heaviest: z > y > x
        auto t = TermOrder::permuted_lex({2, 1, 0});
        CHECK(t.compare(xz, yy) == Ordering::greater);  // z beats y
        CHECK(t.compare(mono({2, 0, 0}), mono({0, 1, 0})) == Ordering::less);
    }

    SUBCASE("parse round trip") {
        for (const std::string s : {"lex", "degrevlex", "weight:2,1,1", "perm:3,1,2", "permrl:2,1,3"})
            CHECK(TermOrder::parse(s).describe() == s);
        CHECK_THROWS_AS(TermOrder::parse("weight:1,0"), Error);
        CHECK_THROWS_AS(TermOrder::parse("nonsense"), Error);
    }

    SUBCASE("total and multiplicative on random triples") {
        Rng rng(11);
        std::vector<TermOrder> orders = {TermOrder::lex(), TermOrder::degrevlex(),
                                         TermOrder::weighted({2, 1, 3}),
                                         TermOrder::permuted_degrevlex({1, 2, 0}),
                                         TermOrder::block(1)};
        auto random_mono = [&] {
            return mono({static_cast<int>(rng.below(4)), static_cast<int>(rng.below(4)),
                         static_cast<int>(rng.below(4))});
        };
        for (int t = 0; t < 300; ++t) {
            Monomial a = random_mono(), b = random_mono(), c = random_mono();
            for (const auto& ord : orders) {
                Ordering ab = ord.compare(a, b);
                CHECK((a == b) == (ab == Ordering::equal));
                // antisymmetry
                CHECK(static_cast<int>(ord.compare(b, a)) == -static_cast<int>(ab));
                // multiplicativity
                CHECK(ord.compare(a.times(c), b.times(c)) == ab);
                // transitivity spot check
                if (ord.less(a, b) && ord.less(b, c)) CHECK(ord.less(a, c));
            }
        }
    }

    SUBCASE("lex agrees with degrevlex on powers of one variable") {
        for (int i = 0; i < 3; ++i)
            for (int a = 0; a < 5; ++a)
                for (int b = 0; b < 5; ++b) {
                    Monomial ma = Monomial::variable(3, i, a), mb = Monomial::variable(3, i, b);
                    CHECK(TermOrder::lex().compare(ma, mb) == TermOrder::degrevlex().compare(ma, mb));
                }
    }
}

TEST_CASE("polynomial arithmetic") {
    auto R = ring3();
    auto x = Poly<Fp>::var(R, 0), y = Poly<Fp>::var(R, 1), z = Poly<Fp>::var(R, 2);

    CHECK((x + (-x)).is_zero());
    CHECK((x + y) * (x - y) == x * x - y * y);
    CHECK((x * x + y * z).degree() == 2);
    CHECK((x * x + y * z).is_homogeneous());
    CHECK_FALSE((x * x + y).is_homogeneous());

    SUBCASE("freshman's dream over F_5") {
        auto R5 = make_ring({"x", "y"}, Fp(5));
        auto a = Poly<Fp>::var(R5, 0), b = Poly<Fp>::var(R5, 1);
        auto lhs = (a + b).pow(5);
        // oracle: full binomial expansion with coefficients reduced mod 5
        Poly<Fp> rhs(R5);
        long long binom = 1;
        for (int k = 0; k <= 5; ++k) {
            rhs = rhs + Poly<Fp>::term(R5, Monomial({5 - k, k}), R5->field.from_int(binom));
            binom = binom * (5 - k) / (k + 1);
        }
        CHECK(lhs == rhs);
        CHECK(lhs == a.pow(5) + b.pow(5));
    }

    SUBCASE("leading terms") {
        auto f = x * x + y * z;
        CHECK(f.leading_term(TermOrder::lex()).mono == mono({2, 0, 0}));
        CHECK(f.leading_term(TermOrder::degrevlex()).mono == mono({2, 0, 0}));
        auto g = x * z + y * y;
        CHECK(g.leading_term(TermOrder::lex()).mono == mono({1, 0, 1}));
        CHECK(g.leading_term(TermOrder::degrevlex()).mono == mono({0, 2, 0}));
        CHECK_THROWS_AS(Poly<Fp>(R).leading_term(TermOrder::lex()), Error);
    }
}

TEST_CASE("linear maps") {
    auto R = ring3();
    const Fp& F = R->field;
    auto x = Poly<Fp>::var(R, 0), y = Poly<Fp>::var(R, 1);

    SUBCASE("identity and swap") {
        auto f = x * x + y * Poly<Fp>::var(R, 2);
        CHECK(LinearMap<Fp>::identity(R).apply(f) == f);
        Matrix<Fp> swap(3, 3, F.zero());
        swap.at(0, 1) = F.one();
        swap.at(1, 0) = F.one();
        swap.at(2, 2) = F.one();
        CHECK(LinearMap<Fp>(R, swap).apply(x * x) == y * y);
    }

    SUBCASE("singular matrices are rejected") {
        Matrix<Fp> s(3, 3, F.zero());
        s.at(0, 0) = F.one();
        s.at(1, 0) = F.one();
        s.at(2, 2) = F.one();
        CHECK_THROWS_AS(LinearMap<Fp>(R, s), Error);
    }

    SUBCASE("inverse undoes a random map; composition is consistent") {
        Rng rng(3);
        auto random_map = [&] {
            while (true) {
                Matrix<Fp> m(3, 3, F.zero());
                for (int r = 0; r < 3; ++r)
                    for (int c = 0; c < 3; ++c) m.at(r, c) = rng.below(32003);
                if (!F.is_zero(determinant(m, F))) return LinearMap<Fp>(R, m);
            }
        };
        for (int t = 0; t < 10; ++t) {
            auto g = random_map(), h = random_map();
            auto f = x * x + x * y;
            CHECK(g.inverse().apply(g.apply(f)) == f);
            CHECK(g.apply(h.apply(f)) == g.after(h).apply(f));
            CHECK(g.apply(f).degree() == f.degree());
        }
    }
}

TEST_CASE("ideal file parsing") {
    SUBCASE("three generators in three variables") {
        auto parsed = parse_ideal_text(
            "ring x,y,z; char 32003;\n# comment line\nideal x^2 + y*z, x*y, x*z");
        CHECK(parsed.vars == std::vector<std::string>{"x", "y", "z"});
        CHECK(parsed.characteristic == 32003);
        CHECK(parsed.polys.size() == 3);
        auto [R, polys] = materialize(parsed, Fp(32003));
        CHECK(polys[0].nterms() == 2);
        CHECK(polys[0].degree() == 2);
    }

    SUBCASE("principal ideal over the rationals") {
        auto parsed = parse_ideal_text("ring x; char 0; ideal 3/2*x");
        auto [R, polys] = materialize(parsed, Rationals());
        CHECK(polys.size() == 1);
        CHECK(polys[0].terms().front().coeff == mpq_class(3, 2));
    }

    SUBCASE("error positions") {
        try {
            parse_ideal_text("ring x; char 0; ideal x +");
            FAIL("expected a parse error");
        } catch (const ParseError& e) {
            CHECK(e.line == 1);
            CHECK(e.col == 26);
        }
        CHECK_THROWS_AS(parse_ideal_text("ring x; char 0; ideal y"), ParseError);
        CHECK_THROWS_AS(parse_ideal_text("ring x; char 4; ideal x"), ParseError);
        CHECK_THROWS_AS(parse_ideal_text("ring x; char 2; ideal x"), ParseError);
        CHECK_THROWS_AS(parse_ideal_text("ring x,x; char 0; ideal x"), ParseError);
        CHECK_THROWS_AS(parse_ideal_text("ring x; char 32003; ideal 1/2*x"), ParseError);
    }

    SUBCASE("zero generator is rejected at materialization") {
        auto parsed = parse_ideal_text("ring x; char 0; ideal x - x");
        CHECK_THROWS_AS(materialize(parsed, Rationals()), Error);
    }

    SUBCASE("format round trip on random polynomials") {
        auto R = ring3();
        Rng rng(21);
        for (int t = 0; t < 40; ++t) {
            std::vector<Poly<Fp>> polys;
            int npolys = 1 + static_cast<int>(rng.below(3));
            for (int k = 0; k < npolys; ++k) {
                std::vector<Poly<Fp>::Term> terms;
                int nterms = 1 + static_cast<int>(rng.below(5));
                for (int i = 0; i < nterms; ++i) {
                    Monomial m({static_cast<int>(rng.below(3)), static_cast<int>(rng.below(3)),
                                static_cast<int>(rng.below(3))});
                    if (m.is_unit()) m = Monomial::variable(3, 0);
                    terms.push_back({m, 1 + rng.below(32002)});
                }
                auto p = Poly<Fp>::from_terms(R, std::move(terms));
                if (!p.is_zero()) polys.push_back(p);
            }
            if (polys.empty()) continue;
            auto text = format_ideal<Fp>(R, polys);
            auto [R2, polys2] = materialize(parse_ideal_text(text), Fp(32003));
            REQUIRE(polys2.size() == polys.size());
            for (size_t i = 0; i < polys.size(); ++i) {
                auto back = Poly<Fp>::from_terms(R, {polys2[i].terms().begin(), polys2[i].terms().end()});
                CHECK(back == polys[i]);
            }
        }
    }

    SUBCASE("rational format round trip") {
        auto R = make_ring({"x", "y"}, Rationals());
        auto x = Poly<Rationals>::var(R, 0), y = Poly<Rationals>::var(R, 1);
        auto f = x * x - y * y.scale(mpq_class(7, 3));
        std::vector<Poly<Rationals>> polys{f, x + y};
        auto [R2, polys2] = materialize(parse_ideal_text(format_ideal<Rationals>(R, polys)), Rationals());
        auto back = Poly<Rationals>::from_terms(R, {polys2[0].terms().begin(), polys2[0].terms().end()});
        CHECK(back == f);
    }
}

TEST_CASE("polynomial term with a constant cannot appear in ideal files") {
    CHECK_THROWS_AS(parse_ideal_text("ring x; char 0; ideal 3"), ParseError);
}
