/**
 * @file parse.hpp
 * @brief Parser and printer for the ideal-file language.
 *
 * Grammar (whitespace insignificant, '#' starts a comment to end of line):
 *
 *   file      := ring_decl ";" char_decl ";" ideal_decl
 *   ring_decl := "ring" ident ("," ident)*
 *   char_decl := "char" integer            // 0 or an odd prime
 *   ideal_decl:= "ideal" poly ("," poly)*
 *   poly      := ["-"] term (("+"|"-") term)*
 *   term      := [coeff "*"] factor ("*" factor)*
 *   factor    := ident ["^" integer]
 *   coeff     := integer | integer "/" integer   // fractions only in char 0
 */
#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ginred/polynomial.hpp"

namespace ginred {

struct ParseError : Error {
    ParseError(int line_, int col_, const std::string& msg)
        : Error("parse error at " + std::to_string(line_) + ":" + std::to_string(col_) + ": " + msg),
          line(line_),
          col(col_) {}
    int line;
    int col;
};

struct ParsedTerm {
    int sign = 1;
    long long num = 1;
    long long den = 1;
    std::vector<std::pair<int, int>> factors;  // (variable index, exponent)
};

struct ParsedPoly {
    std::vector<ParsedTerm> terms;
};

struct ParsedIdeal {
    std::vector<std::string> vars;
    long long characteristic = 0;
    std::vector<ParsedPoly> polys;
};

ParsedIdeal parse_ideal_text(std::string_view text);
ParsedIdeal parse_ideal_file(const std::string& path);

template <FieldContext K>
std::pair<RingPtr<K>, std::vector<Poly<K>>> materialize(const ParsedIdeal& in, K field) {
    if (in.characteristic != field.characteristic())
        throw Error("field characteristic does not match the parsed ideal");
    RingPtr<K> ring = make_ring(in.vars, std::move(field));
    const K& F = ring->field;
    std::vector<Poly<K>> polys;
    polys.reserve(in.polys.size());
    for (size_t k = 0; k < in.polys.size(); ++k) {
        std::vector<typename Poly<K>::Term> terms;
        for (const ParsedTerm& t : in.polys[k].terms) {
            typename K::Elem c = F.from_fraction(t.sign * t.num, t.den);
            std::vector<int> e(static_cast<size_t>(ring->nvars), 0);
            for (auto [v, exp] : t.factors) e[static_cast<size_t>(v)] += exp;
            terms.push_back({Monomial(std::move(e)), std::move(c)});
        }
        Poly<K> p = Poly<K>::from_terms(ring, std::move(terms));
        if (p.is_zero())
            throw Error("generator " + std::to_string(k + 1) + " is the zero polynomial");
        polys.push_back(std::move(p));
    }
    return {ring, std::move(polys)};
}

template <FieldContext K>
std::string format_ideal(const RingPtr<K>& ring, std::span<const Poly<K>> polys) {
    std::string s = "ring ";
    for (size_t i = 0; i < ring->names.size(); ++i) s += (i ? "," : "") + ring->names[i];
    s += ";\nchar " + std::to_string(ring->field.characteristic()) + ";\nideal\n";
    for (size_t i = 0; i < polys.size(); ++i) {
        if (polys[i].is_zero()) throw Error("cannot format a zero generator");
        for (const auto& t : polys[i].terms())
            if (t.mono.is_unit()) throw Error("cannot format a generator with a constant term");
        s += "  " + polys[i].str();
        s += i + 1 < polys.size() ? ",\n" : "\n";
    }
    return s;
}

}  // namespace ginred
