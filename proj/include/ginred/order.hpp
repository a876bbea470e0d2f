/**
 * @file order.hpp
 * @brief Term orders: lex, degrevlex, weight-refined, permuted-variable, and block
 *        (elimination) orders. All orders here are multiplicative total orders.
 */
#pragma once

#include <string>
#include <vector>

#include "ginred/monomial.hpp"

namespace ginred {

enum class Ordering { less = -1, equal = 0, greater = 1 };

class TermOrder {
public:
    enum class Kind { lex, degrevlex, weighted, permuted, block };

    static TermOrder lex();
    static TermOrder degrevlex();

    /// Compares by w-weight first, ties broken by degrevlex. Entries must be positive.
    static TermOrder weighted(std::vector<long long> w);

    /// Base order applied after relabeling: position k reads exponent perm[k].
    static TermOrder permuted_lex(std::vector<int> perm);
    static TermOrder permuted_degrevlex(std::vector<int> perm);

    /// Elimination order for the first `head` variables: degrevlex on the head
    /// block, ties by degrevlex on the tail block.
    static TermOrder block(int head);

    /// Accepts "lex", "degrevlex", "weight:w1,w2,...", "perm:i1,i2,..." (lex base,
    /// 1-based indices), "permrl:i1,i2,..." (degrevlex base).
    static TermOrder parse(const std::string& text);

    Kind kind() const { return kind_; }
    int head() const { return head_; }
    const std::vector<long long>& weights() const { return w_; }
    const std::vector<int>& permutation() const { return perm_; }

    Ordering compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::less; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) == Ordering::greater; }
    bool leq(const Monomial& a, const Monomial& b) const { return compare(a, b) != Ordering::greater; }
    bool geq(const Monomial& a, const Monomial& b) const { return compare(a, b) != Ordering::less; }

    std::string describe() const;

    bool operator==(const TermOrder&) const = default;

private:
    TermOrder() = default;

    Kind kind_ = Kind::degrevlex;
    Kind base_ = Kind::lex;  // permuted only
    std::vector<long long> w_;
    std::vector<int> perm_;
    int head_ = 0;
};

/// Canonical storage order for polynomial terms: plain degrevlex.
Ordering ambient_compare(const Monomial& a, const Monomial& b);
inline bool ambient_greater(const Monomial& a, const Monomial& b) {
    return ambient_compare(a, b) == Ordering::greater;
}
inline bool ambient_less(const Monomial& a, const Monomial& b) {
    return ambient_compare(a, b) == Ordering::less;
}

struct AmbientGreater {
    bool operator()(const Monomial& a, const Monomial& b) const { return ambient_greater(a, b); }
};

}  // namespace ginred
