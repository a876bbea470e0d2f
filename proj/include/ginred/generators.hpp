/**
 * @file generators.hpp
 * @brief Minimal generator counts of a graded ideal by exact rank of the
 *        multiplication maps on graded pieces.
 */
#pragma once

#include <map>
#include <span>

#include "ginred/linalg.hpp"
#include "ginred/polynomial.hpp"

namespace ginred {

/// counts[j] = dim I_j - dim (R_1 * I_{j-1}) for j = 0..max_degree.
template <FieldContext K>
std::vector<long long> minimal_generator_counts(std::span<const Poly<K>> gens, int max_degree) {
    if (gens.empty()) return std::vector<long long>(static_cast<size_t>(max_degree) + 1, 0);
    RingPtr<K> ring = gens.front().ring();
    const K& F = ring->field;
    const int n = ring->nvars;
    for (const auto& g : gens) {
        require_same_ring(ring, g.ring());
        if (g.is_zero()) throw Error("zero generator");
        if (!g.is_homogeneous()) throw Error("generator counts need homogeneous input");
        if (g.degree() == 0) throw Error("unit ideal has no minimal generators");
    }

    std::vector<long long> counts(static_cast<size_t>(max_degree) + 1, 0);
    // basis rows of I_{j-1} in reduced echelon form, as coefficient vectors
    std::vector<std::vector<typename K::Elem>> prev_basis;
    std::vector<Monomial> prev_monos;

    for (int j = 1; j <= max_degree; ++j) {
        std::vector<Monomial> monos = monomials_of_degree(n, j);
        std::map<Monomial, int, AmbientGreater> index;
        for (size_t c = 0; c < monos.size(); ++c) index.emplace(monos[c], static_cast<int>(c));

        std::vector<std::vector<typename K::Elem>> rows;
        auto add_row = [&](const Poly<K>& p) {
            std::vector<typename K::Elem> row(monos.size(), F.zero());
            for (const auto& t : p.terms()) row[static_cast<size_t>(index.at(t.mono))] = t.coeff;
            rows.push_back(std::move(row));
        };

        for (const auto& g : gens) {
            if (g.degree() > j) continue;
            for (const auto& m : monomials_of_degree(n, j - g.degree()))
                add_row(g.times_term(m, F.one()));
        }
        Matrix<K> span_j(static_cast<int>(rows.size()), static_cast<int>(monos.size()), F.zero());
        for (size_t r = 0; r < rows.size(); ++r)
            for (size_t c = 0; c < monos.size(); ++c) span_j.at(static_cast<int>(r), static_cast<int>(c)) = rows[r][c];
        EchelonInfo info = reduced_row_echelon(span_j, F);
        long long dim_j = info.rank;

        // span of R_1 * I_{j-1} from the stored echelon basis of I_{j-1}
        long long dim_shift = 0;
        if (!prev_basis.empty()) {
            std::vector<std::vector<typename K::Elem>> shifted;
            for (const auto& row : prev_basis) {
                for (int v = 0; v < n; ++v) {
                    std::vector<typename K::Elem> srow(monos.size(), F.zero());
                    for (size_t c = 0; c < prev_monos.size(); ++c) {
                        if (F.is_zero(row[c])) continue;
                        Monomial shifted_mono = prev_monos[c].times(Monomial::variable(n, v));
                        srow[static_cast<size_t>(index.at(shifted_mono))] = row[c];
                    }
                    shifted.push_back(std::move(srow));
                }
            }
            Matrix<K> ms(static_cast<int>(shifted.size()), static_cast<int>(monos.size()), F.zero());
            for (size_t r = 0; r < shifted.size(); ++r)
                for (size_t c = 0; c < monos.size(); ++c)
                    ms.at(static_cast<int>(r), static_cast<int>(c)) = shifted[r][c];
            dim_shift = reduced_row_echelon(ms, F).rank;
        }

        counts[static_cast<size_t>(j)] = dim_j - dim_shift;

        prev_basis.clear();
        for (int r = 0; r < info.rank; ++r) {
            std::vector<typename K::Elem> row(monos.size());
            for (size_t c = 0; c < monos.size(); ++c) row[c] = span_j.at(r, static_cast<int>(c));
            prev_basis.push_back(std::move(row));
        }
        prev_monos = std::move(monos);
    }
    return counts;
}

}  // namespace ginred
