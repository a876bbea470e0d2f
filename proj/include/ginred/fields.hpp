/**
 * @file fields.hpp
 * @brief Exact coefficient fields: prime fields F_p and arbitrary-precision rationals.
 */
#pragma once

#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include <gmpxx.h>

namespace ginred {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when randomized genericity assumptions fail persistently.
struct GenericityError : Error {
    using Error::Error;
};

/// Raised when a degree bound is exhausted before a computation stabilizes.
struct BoundError : Error {
    using Error::Error;
};

template <class K>
concept FieldContext =
    std::semiregular<typename K::Elem> &&
    requires(const K k, const typename K::Elem a, const typename K::Elem b, long long i) {
        { k.zero() } -> std::convertible_to<typename K::Elem>;
        { k.one() } -> std::convertible_to<typename K::Elem>;
        { k.from_int(i) } -> std::convertible_to<typename K::Elem>;
        { k.add(a, b) } -> std::convertible_to<typename K::Elem>;
        { k.sub(a, b) } -> std::convertible_to<typename K::Elem>;
        { k.neg(a) } -> std::convertible_to<typename K::Elem>;
        { k.mul(a, b) } -> std::convertible_to<typename K::Elem>;
        { k.inv(a) } -> std::convertible_to<typename K::Elem>;
        { k.is_zero(a) } -> std::convertible_to<bool>;
        { k.equal(a, b) } -> std::convertible_to<bool>;
        { k.characteristic() } -> std::convertible_to<long long>;
    };

/// F_p for an odd prime p < 2^31; elements are canonical representatives in [0, p).
class Fp {
public:
    using Elem = std::uint64_t;

    explicit Fp(std::uint64_t p) : p_(p) {
        if (p < 3 || !is_prime(p) || p >= (1ull << 31))
            throw Error("characteristic must be an odd prime below 2^31, got " + std::to_string(p));
    }

    long long characteristic() const { return static_cast<long long>(p_); }
    std::uint64_t modulus() const { return p_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem from_int(long long k) const {
        long long r = k % static_cast<long long>(p_);
        if (r < 0) r += static_cast<long long>(p_);
        return static_cast<Elem>(r);
    }
    Elem from_fraction(long long num, long long den) const {
        Elem d = from_int(den);
        if (d == 0) throw Error("denominator vanishes modulo the characteristic");
        return mul(from_int(num), inv(d));
    }

    Elem add(Elem a, Elem b) const { Elem s = a + b; return s >= p_ ? s - p_ : s; }
    Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
    Elem mul(Elem a, Elem b) const { return (a * b) % p_; }
    Elem inv(Elem a) const {
        if (a == 0) throw Error("inverse of zero");
        long long t = 0, nt = 1;
        long long r = static_cast<long long>(p_), nr = static_cast<long long>(a);
        while (nr != 0) {
            long long q = r / nr;
            t -= q * nt; std::swap(t, nt);
            r -= q * nr; std::swap(r, nr);
        }
        return static_cast<Elem>(t < 0 ? t + static_cast<long long>(p_) : t);
    }
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, long long e) const {
        Elem r = 1, base = a;
        for (; e > 0; e >>= 1) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
        }
        return r;
    }

    bool is_zero(Elem a) const { return a == 0; }
    bool is_one(Elem a) const { return a == 1; }
    bool equal(Elem a, Elem b) const { return a == b; }

    /// Display form: balanced representative, as (negative?, magnitude).
    std::pair<bool, std::string> display(Elem a) const {
        if (a > p_ / 2) return {true, std::to_string(p_ - a)};
        return {false, std::to_string(a)};
    }
    std::string str(Elem a) const {
        auto [nega, mag] = display(a);
        return nega ? "-" + mag : mag;
    }

    static bool is_prime(std::uint64_t n) {
        if (n < 2) return false;
        if (n % 2 == 0) return n == 2;
        for (std::uint64_t d = 3; d * d <= n; d += 2)
            if (n % d == 0) return false;
        return true;
    }

    bool operator==(const Fp&) const = default;

private:
    std::uint64_t p_;
};

/// Exact rationals backed by GMP; values stay fully reduced with positive denominator.
class Rationals {
public:
    using Elem = mpq_class;

    long long characteristic() const { return 0; }

    Elem zero() const { return mpq_class(0); }
    Elem one() const { return mpq_class(1); }

    Elem from_int(long long k) const { return mpq_class(static_cast<long>(k)); }
    Elem from_fraction(long long num, long long den) const {
        if (den == 0) throw Error("zero denominator");
        mpq_class q(static_cast<long>(num), static_cast<long>(den));
        q.canonicalize();
        return q;
    }

    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem inv(const Elem& a) const {
        if (a == 0) throw Error("inverse of zero");
        return 1 / a;
    }
    Elem div(const Elem& a, const Elem& b) const { return a / inv_guard(b); }

    bool is_zero(const Elem& a) const { return a == 0; }
    bool is_one(const Elem& a) const { return a == 1; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }

    std::pair<bool, std::string> display(const Elem& a) const {
        if (a < 0) return {true, mpq_class(-a).get_str()};
        return {false, a.get_str()};
    }
    std::string str(const Elem& a) const { return a.get_str(); }

    bool operator==(const Rationals&) const = default;

private:
    const Elem& inv_guard(const Elem& b) const {
        if (b == 0) throw Error("division by zero");
        return b;
    }
};

static_assert(FieldContext<Fp>);
static_assert(FieldContext<Rationals>);

}  // namespace ginred
