/**
 * @file monomial_ideal.hpp
 * @brief Combinatorics of monomial ideals: minimal generators, containment,
 *        Krull dimension, stability and lex-segment predicates, lex-segment
 *        construction, coordinate-subspace sums, and polarization.
 */
#pragma once

#include <span>
#include <string>
#include <vector>

#include "ginred/order.hpp"

namespace ginred {

class MonomialIdeal {
public:
    /// The zero ideal in n variables.
    explicit MonomialIdeal(int nvars) : n_(nvars) {}

    /// Divisibility-minimal generators of the ideal the input generates.
    static MonomialIdeal minimalize(int nvars, std::vector<Monomial> monomials);

    int nvars() const { return n_; }
    const std::vector<Monomial>& generators() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return !gens_.empty() && gens_.front().is_unit(); }
    int max_generator_degree() const;

    bool contains(const Monomial& m) const;

    /// I : x_i.
    MonomialIdeal quotient_by_variable(int i) const;
    /// I + (x_i).
    MonomialIdeal plus_variable(int i) const;
    /// I + (x_{n-p+1}, ..., x_n), minimalized.
    MonomialIdeal add_coordinate_subspace(int p) const;

    bool operator==(const MonomialIdeal&) const = default;

private:
    int n_;
    std::vector<Monomial> gens_;  // minimal, ambient-descending; canonical
};

/// Largest size of a variable subset supporting no generator entirely.
/// The unit ideal reports -1 by convention.
int krull_dimension(const MonomialIdeal& I);

/// True iff swapping any variable of any generator for an earlier variable
/// stays in the ideal. Checking generators suffices.
bool is_strongly_stable(const MonomialIdeal& I);

/// True iff every graded piece up to the maximal generator degree is a
/// lex-initial segment.
bool is_lex_segment(const MonomialIdeal& I);

/// Builds the lex-segment ideal with the given ideal dimensions dim I_j for
/// j = 0..D; validates the Macaulay consistency R_1 L_j within L_{j+1}.
MonomialIdeal lex_segment_ideal(int nvars, std::span<const long long> ideal_dims);

struct Polarization {
    MonomialIdeal ideal;                      // lives in the extended ring
    std::vector<std::string> names;           // extended variable names
    std::vector<std::pair<int, int>> origin;  // variable -> (source variable, copy index)
};

/// Replaces x_i^a by x_i * x_{i,1} * ... * x_{i,a-1} for each selected variable,
/// sharing the new variables positionally across generators. New variables are
/// appended after x_n, grouped by source variable in ascending order.
Polarization polarize(const MonomialIdeal& I, std::span<const std::string> names,
                      std::span<const int> which = {});

/// Counts of minimal generators per degree for a monomial ideal.
std::vector<long long> generator_degree_counts(const MonomialIdeal& I, int max_degree);

std::string to_string(const MonomialIdeal& I, std::span<const std::string> names);

}  // namespace ginred
