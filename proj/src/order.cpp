#include "ginred/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ginred/fields.hpp"

namespace ginred {

namespace {

// lex on exponent ranges, larger first-differing exponent wins
Ordering lex_cmp(const std::vector<int>& a, const std::vector<int>& b) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] > b[i] ? Ordering::greater : Ordering::less;
    }
    return Ordering::equal;
}

// degrevlex: total degree first; ties by the last differing exponent, smaller winning
Ordering degrevlex_cmp(const std::vector<int>& a, const std::vector<int>& b, int dega, int degb) {
    if (dega != degb) return dega > degb ? Ordering::greater : Ordering::less;
    for (size_t i = a.size(); i-- > 0;) {
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::greater : Ordering::less;
    }
    return Ordering::equal;
}

Ordering degrevlex_range(const std::vector<int>& a, const std::vector<int>& b, size_t lo, size_t hi) {
    int dega = 0, degb = 0;
    for (size_t i = lo; i < hi; ++i) {
        dega += a[i];
        degb += b[i];
    }
    if (dega != degb) return dega > degb ? Ordering::greater : Ordering::less;
    for (size_t i = hi; i-- > lo;) {
        if (a[i] != b[i]) return a[i] < b[i] ? Ordering::greater : Ordering::less;
    }
    return Ordering::equal;
}

std::vector<long long> parse_numbers(const std::string& s) {
    std::vector<long long> out;
    std::stringstream ss(s);
    std::string part;
    while (std::getline(ss, part, ',')) {
        if (part.empty()) throw Error("empty entry in order spec '" + s + "'");
        out.push_back(std::stoll(part));
    }
    return out;
}

}  // namespace

TermOrder TermOrder::lex() {
    TermOrder t;
    t.kind_ = Kind::lex;
    return t;
}

TermOrder TermOrder::degrevlex() {
    TermOrder t;
    t.kind_ = Kind::degrevlex;
    return t;
}

TermOrder TermOrder::weighted(std::vector<long long> w) {
    for (long long x : w)
        if (x <= 0) throw Error("weight vectors must be strictly positive");
    TermOrder t;
    t.kind_ = Kind::weighted;
    t.w_ = std::move(w);
    return t;
}

static void check_permutation(const std::vector<int>& perm) {
    std::vector<int> seen(perm.size(), 0);
    for (int p : perm) {
        if (p < 0 || p >= static_cast<int>(perm.size()) || seen[static_cast<size_t>(p)]++)
            throw Error("invalid variable permutation");
    }
}

TermOrder TermOrder::permuted_lex(std::vector<int> perm) {
    check_permutation(perm);
    TermOrder t;
    t.kind_ = Kind::permuted;
    t.base_ = Kind::lex;
    t.perm_ = std::move(perm);
    return t;
}

TermOrder TermOrder::permuted_degrevlex(std::vector<int> perm) {
    check_permutation(perm);
    TermOrder t;
    t.kind_ = Kind::permuted;
    t.base_ = Kind::degrevlex;
    t.perm_ = std::move(perm);
    return t;
}

TermOrder TermOrder::block(int head) {
    if (head < 0) throw Error("block head must be non-negative");
    TermOrder t;
    t.kind_ = Kind::block;
    t.head_ = head;
    return t;
}

TermOrder TermOrder::parse(const std::string& text) {
    if (text == "lex") return lex();
    if (text == "degrevlex" || text == "revlex" || text == "rl") return degrevlex();
    if (text.rfind("weight:", 0) == 0) return weighted(parse_numbers(text.substr(7)));
    auto perm_of = [](const std::string& body) {
        std::vector<int> perm;
        for (long long v : parse_numbers(body)) perm.push_back(static_cast<int>(v) - 1);
        return perm;
    };
    if (text.rfind("perm:", 0) == 0) return permuted_lex(perm_of(text.substr(5)));
    if (text.rfind("permrl:", 0) == 0) return permuted_degrevlex(perm_of(text.substr(7)));
    throw Error("unknown term order '" + text + "'");
}

Ordering TermOrder::compare(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw Error("comparing monomials from different rings");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    switch (kind_) {
        case Kind::lex:
            return lex_cmp(ea, eb);
        case Kind::degrevlex:
            return degrevlex_cmp(ea, eb, a.degree(), b.degree());
        case Kind::weighted: {
            if (w_.size() != ea.size()) throw Error("weight vector length mismatch");
            long long wa = 0, wb = 0;
            for (size_t i = 0; i < ea.size(); ++i) {
                wa += w_[i] * ea[i];
                wb += w_[i] * eb[i];
            }
            if (wa != wb) return wa > wb ? Ordering::greater : Ordering::less;
            return degrevlex_cmp(ea, eb, a.degree(), b.degree());
        }
        case Kind::permuted: {
            if (perm_.size() != ea.size()) throw Error("permutation length mismatch");
            std::vector<int> pa(ea.size()), pb(eb.size());
            for (size_t k = 0; k < ea.size(); ++k) {
                pa[k] = ea[static_cast<size_t>(perm_[k])];
                pb[k] = eb[static_cast<size_t>(perm_[k])];
            }
            if (base_ == Kind::lex) return lex_cmp(pa, pb);
            return degrevlex_cmp(pa, pb, a.degree(), b.degree());
        }
        case Kind::block: {
            size_t h = static_cast<size_t>(std::min<int>(head_, a.nvars()));
            Ordering o = degrevlex_range(ea, eb, 0, h);
            if (o != Ordering::equal) return o;
            return degrevlex_range(ea, eb, h, ea.size());
        }
    }
    throw Error("unreachable order kind");
}

std::string TermOrder::describe() const {
    switch (kind_) {
        case Kind::lex:
            return "lex";
        case Kind::degrevlex:
            return "degrevlex";
        case Kind::weighted: {
            std::string s = "weight:";
            for (size_t i = 0; i < w_.size(); ++i) s += (i ? "," : "") + std::to_string(w_[i]);
            return s;
        }
        case Kind::permuted: {
            std::string s = base_ == Kind::lex ? "perm:" : "permrl:";
            for (size_t i = 0; i < perm_.size(); ++i) s += (i ? "," : "") + std::to_string(perm_[i] + 1);
            return s;
        }
        case Kind::block:
            return "block:" + std::to_string(head_);
    }
    return "?";
}

Ordering ambient_compare(const Monomial& a, const Monomial& b) {
    return degrevlex_cmp(a.exponents(), b.exponents(), a.degree(), b.degree());
}

}  // namespace ginred
