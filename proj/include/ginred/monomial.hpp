/**
 * @file monomial.hpp
 * @brief Dense exponent-vector monomials and degree-wise enumeration.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

namespace ginred {

class Monomial {
public:
    explicit Monomial(int nvars) : e_(static_cast<size_t>(nvars), 0) {}
    explicit Monomial(std::vector<int> exps);

    static Monomial unit(int nvars) { return Monomial(nvars); }
    static Monomial variable(int nvars, int index, int power = 1);

    int nvars() const { return static_cast<int>(e_.size()); }
    int degree() const { return deg_; }
    int operator[](int i) const { return e_[static_cast<size_t>(i)]; }
    bool is_unit() const { return deg_ == 0; }
    const std::vector<int>& exponents() const { return e_; }

    Monomial times(const Monomial& m) const;
    bool divides(const Monomial& m) const;        // this | m
    Monomial divide_by(const Monomial& m) const;  // this / m, exact

    /// Largest variable index (0-based) with positive exponent; throws on the unit monomial.
    int max_variable() const;

    bool operator==(const Monomial&) const = default;

private:
    std::vector<int> e_;
    int deg_ = 0;
};

Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);
bool coprime(const Monomial& a, const Monomial& b);

/// All monomials of the given degree, lexicographically descending (x_0 heaviest).
std::vector<Monomial> monomials_of_degree(int nvars, int degree);

/// C(degree + nvars - 1, nvars - 1).
long long count_monomials(int nvars, int degree);

long long binomial(long long n, long long k);

std::string to_string(const Monomial& m, std::span<const std::string> names);

}  // namespace ginred
