#include "ginred/parse.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace ginred {

namespace {

struct Token {
    enum class Kind { ident, integer, punct, end };
    Kind kind = Kind::end;
    std::string text;
    long long value = 0;
    int line = 1, col = 1;
};

class Lexer {
public:
    explicit Lexer(std::string_view text) : s_(text) { advance(); }

    const Token& peek() const { return tok_; }

    Token take() {
        Token t = tok_;
        advance();
        return t;
    }

private:
    void advance() {
        skip_space();
        tok_ = Token{};
        tok_.line = line_;
        tok_.col = col_;
        if (pos_ >= s_.size()) {
            tok_.kind = Token::Kind::end;
            tok_.text = "end of input";
            return;
        }
        char c = s_[pos_];
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                step();
            tok_.kind = Token::Kind::ident;
            tok_.text = std::string(s_.substr(start, pos_ - start));
            return;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) step();
            tok_.kind = Token::Kind::integer;
            tok_.text = std::string(s_.substr(start, pos_ - start));
            try {
                tok_.value = std::stoll(tok_.text);
            } catch (const std::out_of_range&) {
                throw ParseError(tok_.line, tok_.col, "integer literal out of range");
            }
            return;
        }
        if (std::string(";,+-*/^").find(c) != std::string::npos) {
            tok_.kind = Token::Kind::punct;
            tok_.text = std::string(1, c);
            step();
            return;
        }
        throw ParseError(line_, col_, std::string("unexpected character '") + c + "'");
    }

    void skip_space() {
        while (pos_ < s_.size()) {
            char c = s_[pos_];
            if (c == '#') {
                while (pos_ < s_.size() && s_[pos_] != '\n') step();
            } else if (std::isspace(static_cast<unsigned char>(c))) {
                step();
            } else {
                break;
            }
        }
    }

    void step() {
        if (s_[pos_] == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        ++pos_;
    }

    std::string_view s_;
    size_t pos_ = 0;
    int line_ = 1, col_ = 1;
    Token tok_;
};

class Parser {
public:
    explicit Parser(std::string_view text) : lex_(text) {}

    ParsedIdeal run() {
        ParsedIdeal out;
        expect_keyword("ring");
        out.vars.push_back(take_ident());
        while (accept_punct(",")) out.vars.push_back(take_ident());
        for (size_t i = 0; i < out.vars.size(); ++i)
            for (size_t j = i + 1; j < out.vars.size(); ++j)
                if (out.vars[i] == out.vars[j])
                    fail("duplicate variable '" + out.vars[i] + "'");
        expect_punct(";");

        expect_keyword("char");
        Token chartok = lex_.peek();
        out.characteristic = take_integer();
        if (out.characteristic != 0 &&
            (out.characteristic == 2 || !Fp::is_prime(static_cast<std::uint64_t>(out.characteristic))))
            throw ParseError(chartok.line, chartok.col,
                             "characteristic must be 0 or an odd prime, got " + chartok.text);
        expect_punct(";");

        expect_keyword("ideal");
        vars_ = &out.vars;
        char0_ = out.characteristic == 0;
        out.polys.push_back(poly());
        while (accept_punct(",")) out.polys.push_back(poly());
        if (lex_.peek().kind != Token::Kind::end) fail("trailing input after the ideal");
        return out;
    }

private:
    ParsedPoly poly() {
        ParsedPoly p;
        int sign = accept_punct("-") ? -1 : 1;
        p.terms.push_back(term(sign));
        while (true) {
            if (accept_punct("+"))
                p.terms.push_back(term(1));
            else if (accept_punct("-"))
                p.terms.push_back(term(-1));
            else
                break;
        }
        return p;
    }

    ParsedTerm term(int sign) {
        ParsedTerm t;
        t.sign = sign;
        if (lex_.peek().kind == Token::Kind::integer) {
            t.num = take_integer();
            if (accept_punct("/")) {
                Token slash_pos = lex_.peek();
                t.den = take_integer();
                if (!char0_)
                    throw ParseError(slash_pos.line, slash_pos.col,
                                     "fractional coefficients need characteristic 0");
                if (t.den == 0) throw ParseError(slash_pos.line, slash_pos.col, "zero denominator");
            }
            expect_punct("*");
        }
        t.factors.push_back(factor());
        while (accept_punct("*")) t.factors.push_back(factor());
        return t;
    }

    std::pair<int, int> factor() {
        Token tok = lex_.peek();
        std::string name = take_ident();
        int index = -1;
        for (size_t i = 0; i < vars_->size(); ++i)
            if ((*vars_)[i] == name) index = static_cast<int>(i);
        if (index < 0) throw ParseError(tok.line, tok.col, "unknown variable '" + name + "'");
        int exp = 1;
        if (accept_punct("^")) {
            long long e = take_integer();
            if (e < 0 || e > 1'000'000) fail("exponent out of range");
            exp = static_cast<int>(e);
        }
        return {index, exp};
    }

    void expect_keyword(const std::string& kw) {
        Token t = lex_.take();
        if (t.kind != Token::Kind::ident || t.text != kw)
            throw ParseError(t.line, t.col, "expected '" + kw + "', found '" + t.text + "'");
    }

    std::string take_ident() {
        Token t = lex_.take();
        if (t.kind != Token::Kind::ident)
            throw ParseError(t.line, t.col, "expected an identifier, found '" + t.text + "'");
        return t.text;
    }

    long long take_integer() {
        Token t = lex_.take();
        if (t.kind != Token::Kind::integer)
            throw ParseError(t.line, t.col, "expected an integer, found '" + t.text + "'");
        return t.value;
    }

    bool accept_punct(const std::string& p) {
        if (lex_.peek().kind == Token::Kind::punct && lex_.peek().text == p) {
            lex_.take();
            return true;
        }
        return false;
    }

    void expect_punct(const std::string& p) {
        Token t = lex_.take();
        if (t.kind != Token::Kind::punct || t.text != p)
            throw ParseError(t.line, t.col, "expected '" + p + "', found '" + t.text + "'");
    }

    [[noreturn]] void fail(const std::string& msg) {
        throw ParseError(lex_.peek().line, lex_.peek().col, msg);
    }

    Lexer lex_;
    const std::vector<std::string>* vars_ = nullptr;
    bool char0_ = false;
};

}  // namespace

ParsedIdeal parse_ideal_text(std::string_view text) { return Parser(text).run(); }

ParsedIdeal parse_ideal_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_ideal_text(ss.str());
}

}  // namespace ginred
