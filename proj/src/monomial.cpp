#include "ginred/monomial.hpp"

#include <algorithm>
#include <numeric>

#include "ginred/fields.hpp"

namespace ginred {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    for (int x : e_) {
        if (x < 0) throw Error("negative exponent");
        deg_ += x;
    }
}

Monomial Monomial::variable(int nvars, int index, int power) {
    Monomial m(nvars);
    m.e_[static_cast<size_t>(index)] = power;
    m.deg_ = power;
    return m;
}

Monomial Monomial::times(const Monomial& m) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) r.e_[i] += m.e_[i];
    r.deg_ += m.deg_;
    return r;
}

bool Monomial::divides(const Monomial& m) const {
    if (deg_ > m.deg_) return false;
    for (size_t i = 0; i < e_.size(); ++i)
        if (e_[i] > m.e_[i]) return false;
    return true;
}

Monomial Monomial::divide_by(const Monomial& m) const {
    Monomial r(*this);
    for (size_t i = 0; i < e_.size(); ++i) {
        r.e_[i] -= m.e_[i];
        if (r.e_[i] < 0) throw Error("inexact monomial division");
    }
    r.deg_ -= m.deg_;
    return r;
}

int Monomial::max_variable() const {
    for (int i = nvars() - 1; i >= 0; --i)
        if (e_[static_cast<size_t>(i)] > 0) return i;
    throw Error("max_variable of the unit monomial");
}

Monomial lcm(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exponents());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::max(e[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

Monomial gcd(const Monomial& a, const Monomial& b) {
    std::vector<int> e(a.exponents());
    for (size_t i = 0; i < e.size(); ++i) e[i] = std::min(e[i], b.exponents()[i]);
    return Monomial(std::move(e));
}

bool coprime(const Monomial& a, const Monomial& b) {
    for (int i = 0; i < a.nvars(); ++i)
        if (a[i] > 0 && b[i] > 0) return false;
    return true;
}

namespace {

void enumerate(int var, int left, std::vector<int>& e, std::vector<Monomial>& out) {
    if (var == static_cast<int>(e.size()) - 1) {
        e[static_cast<size_t>(var)] = left;
        out.push_back(Monomial(e));
        return;
    }
    for (int k = left; k >= 0; --k) {
        e[static_cast<size_t>(var)] = k;
        enumerate(var + 1, left - k, e, out);
    }
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int nvars, int degree) {
    std::vector<Monomial> out;
    if (nvars == 0) {
        if (degree == 0) out.push_back(Monomial(0));
        return out;
    }
    out.reserve(static_cast<size_t>(count_monomials(nvars, degree)));
    std::vector<int> e(static_cast<size_t>(nvars), 0);
    enumerate(0, degree, e, out);
    return out;
}

long long binomial(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

long long count_monomials(int nvars, int degree) {
    if (nvars == 0) return degree == 0 ? 1 : 0;
    return binomial(degree + nvars - 1, nvars - 1);
}

std::string to_string(const Monomial& m, std::span<const std::string> names) {
    if (m.is_unit()) return "1";
    std::string s;
    for (int i = 0; i < m.nvars(); ++i) {
        if (m[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += names[static_cast<size_t>(i)];
        if (m[i] > 1) s += "^" + std::to_string(m[i]);
    }
    return s;
}

}  // namespace ginred
