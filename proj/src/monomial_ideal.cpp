#include "ginred/monomial_ideal.hpp"

#include <algorithm>

#include "ginred/fields.hpp"

namespace ginred {

MonomialIdeal MonomialIdeal::minimalize(int nvars, std::vector<Monomial> monomials) {
    for (const auto& m : monomials)
        if (m.nvars() != nvars) throw Error("monomial does not fit the ring");
    std::sort(monomials.begin(), monomials.end(),
              [](const Monomial& a, const Monomial& b) { return ambient_less(a, b); });
    MonomialIdeal I(nvars);
    for (auto& m : monomials) {
        bool redundant = false;
        for (const auto& g : I.gens_) {
            if (g.divides(m)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) I.gens_.push_back(std::move(m));
    }
    std::sort(I.gens_.begin(), I.gens_.end(),
              [](const Monomial& a, const Monomial& b) { return ambient_greater(a, b); });
    return I;
}

int MonomialIdeal::max_generator_degree() const {
    int d = 0;
    for (const auto& g : gens_) d = std::max(d, g.degree());
    return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
    if (m.nvars() != n_) throw Error("monomial does not fit the ring");
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal MonomialIdeal::quotient_by_variable(int i) const {
    std::vector<Monomial> out;
    out.reserve(gens_.size());
    const Monomial xi = Monomial::variable(n_, i);
    for (const auto& g : gens_) out.push_back(g[i] > 0 ? g.divide_by(xi) : g);
    return minimalize(n_, std::move(out));
}

MonomialIdeal MonomialIdeal::plus_variable(int i) const {
    std::vector<Monomial> out;
    out.reserve(gens_.size() + 1);
    for (const auto& g : gens_)
        if (g[i] == 0) out.push_back(g);
    out.push_back(Monomial::variable(n_, i));
    return minimalize(n_, std::move(out));
}

MonomialIdeal MonomialIdeal::add_coordinate_subspace(int p) const {
    if (p < 0 || p > n_) throw Error("subspace size out of range");
    std::vector<Monomial> out(gens_);
    for (int i = n_ - p; i < n_; ++i) out.push_back(Monomial::variable(n_, i));
    return minimalize(n_, std::move(out));
}

int krull_dimension(const MonomialIdeal& I) {
    if (I.is_unit()) return -1;
    int n = I.nvars();
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        int size = __builtin_popcount(mask);
        if (size <= best) continue;
        bool independent = true;
        for (const auto& g : I.generators()) {
            bool inside = true;
            for (int i = 0; i < n && inside; ++i)
                if (g[i] > 0 && !(mask & (1u << i))) inside = false;
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = size;
    }
    return best;
}

bool is_strongly_stable(const MonomialIdeal& I) {
    const int n = I.nvars();
    for (const auto& g : I.generators()) {
        for (int i = 1; i < n; ++i) {
            if (g[i] == 0) continue;
            Monomial lowered = g.divide_by(Monomial::variable(n, i));
            for (int j = 0; j < i; ++j)
                if (!I.contains(lowered.times(Monomial::variable(n, j)))) return false;
        }
    }
    return true;
}

bool is_lex_segment(const MonomialIdeal& I) {
    for (int d = 1; d <= I.max_generator_degree(); ++d) {
        bool left_segment = true;
        for (const auto& m : monomials_of_degree(I.nvars(), d)) {  // lex descending
            bool in = I.contains(m);
            if (in && !left_segment) return false;
            if (!in) left_segment = false;
        }
    }
    return true;
}

MonomialIdeal lex_segment_ideal(int nvars, std::span<const long long> ideal_dims) {
    const int D = static_cast<int>(ideal_dims.size()) - 1;
    if (D < 0) return MonomialIdeal(nvars);

    // threshold[j]: lex-smallest member of L_j, or unset when L_j is empty
    std::vector<std::vector<Monomial>> bases;
    std::vector<long long> sizes(static_cast<size_t>(D) + 1);
    for (int j = 0; j <= D; ++j) {
        long long total = count_monomials(nvars, j);
        long long k = ideal_dims[static_cast<size_t>(j)];
        if (k < 0 || k > total)
            throw Error("dimension sequence entry out of range in degree " + std::to_string(j));
        sizes[static_cast<size_t>(j)] = k;
        bases.push_back(monomials_of_degree(nvars, j));
    }

    const TermOrder lex = TermOrder::lex();
    auto member = [&](int j, const Monomial& m) {
        long long k = sizes[static_cast<size_t>(j)];
        if (k == 0) return false;
        const Monomial& threshold = bases[static_cast<size_t>(j)][static_cast<size_t>(k - 1)];
        return lex.geq(m, threshold);
    };

    // Macaulay validity: R_1 * L_j inside L_{j+1}
    for (int j = 0; j < D; ++j) {
        long long k = sizes[static_cast<size_t>(j)];
        if (k == 0) continue;
        const Monomial& threshold = bases[static_cast<size_t>(j)][static_cast<size_t>(k - 1)];
        for (int i = 0; i < nvars; ++i)
            if (!member(j + 1, threshold.times(Monomial::variable(nvars, i))))
                throw Error("dimension sequence is not the Hilbert function of an ideal (degree " +
                            std::to_string(j + 1) + ")");
    }

    std::vector<Monomial> gens;
    for (int j = 0; j <= D; ++j) {
        long long k = sizes[static_cast<size_t>(j)];
        for (long long t = 0; t < k; ++t) {
            const Monomial& m = bases[static_cast<size_t>(j)][static_cast<size_t>(t)];
            bool fresh = true;
            if (j > 0) {
                for (int i = 0; i < nvars && fresh; ++i)
                    if (m[i] > 0 && member(j - 1, m.divide_by(Monomial::variable(nvars, i))))
                        fresh = false;
            }
            if (fresh) gens.push_back(m);
        }
    }
    return MonomialIdeal::minimalize(nvars, std::move(gens));
}

Polarization polarize(const MonomialIdeal& I, std::span<const std::string> names,
                      std::span<const int> which) {
    const int n = I.nvars();
    if (static_cast<int>(names.size()) != n) throw Error("name list does not fit the ring");
    std::vector<bool> selected(static_cast<size_t>(n), which.empty());
    for (int i : which) {
        if (i < 0 || i >= n) throw Error("polarization variable out of range");
        selected[static_cast<size_t>(i)] = true;
    }

    // copies[i]: extra variables needed for x_i beyond the original
    std::vector<int> copies(static_cast<size_t>(n), 0);
    for (const auto& g : I.generators())
        for (int i = 0; i < n; ++i)
            if (selected[static_cast<size_t>(i)])
                copies[static_cast<size_t>(i)] = std::max(copies[static_cast<size_t>(i)], g[i] - 1);

    Polarization out{MonomialIdeal(0), {}, {}};
    out.names.assign(names.begin(), names.end());
    out.origin.clear();
    for (int i = 0; i < n; ++i) out.origin.push_back({i, 0});
    std::vector<int> first_copy(static_cast<size_t>(n), 0);
    int total = n;
    for (int i = 0; i < n; ++i) {
        first_copy[static_cast<size_t>(i)] = total;
        for (int k = 1; k <= copies[static_cast<size_t>(i)]; ++k) {
            out.names.push_back(std::string(names[static_cast<size_t>(i)]) + "_" + std::to_string(k));
            out.origin.push_back({i, k});
            ++total;
        }
    }

    std::vector<Monomial> gens;
    for (const auto& g : I.generators()) {
        std::vector<int> e(static_cast<size_t>(total), 0);
        for (int i = 0; i < n; ++i) {
            if (g[i] == 0) continue;
            if (!selected[static_cast<size_t>(i)]) {
                e[static_cast<size_t>(i)] = g[i];
            } else {
                e[static_cast<size_t>(i)] = 1;
                for (int k = 1; k < g[i]; ++k)
                    e[static_cast<size_t>(first_copy[static_cast<size_t>(i)] + k - 1)] = 1;
            }
        }
        gens.push_back(Monomial(std::move(e)));
    }
    out.ideal = MonomialIdeal::minimalize(total, std::move(gens));
    return out;
}

std::vector<long long> generator_degree_counts(const MonomialIdeal& I, int max_degree) {
    std::vector<long long> counts(static_cast<size_t>(max_degree) + 1, 0);
    for (const auto& g : I.generators())
        if (g.degree() <= max_degree) ++counts[static_cast<size_t>(g.degree())];
    return counts;
}

std::string to_string(const MonomialIdeal& I, std::span<const std::string> names) {
    if (I.is_zero()) return "(0)";
    std::string s = "(";
    for (size_t i = 0; i < I.generators().size(); ++i)
        s += (i ? ", " : "") + to_string(I.generators()[i], names);
    return s + ")";
}

}  // namespace ginred
