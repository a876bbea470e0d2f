/**
 * @file hilbert.hpp
 * @brief Hilbert functions of monomial quotients, computed by two independent
 *        algorithms that must agree.
 */
#pragma once

#include "ginred/monomial_ideal.hpp"

namespace ginred {

struct HilbertFunction {
    int bound = 0;                  // values cover degrees 0..bound
    std::vector<long long> values;  // values[j] = dim_K (R/I)_j

    long long operator[](int j) const { return values[static_cast<size_t>(j)]; }
    bool operator==(const HilbertFunction&) const = default;

    /// Largest degree with a nonzero value; -1 when identically zero.
    int last_nonzero() const {
        for (int j = bound; j >= 0; --j)
            if (values[static_cast<size_t>(j)] != 0) return j;
        return -1;
    }

    /// True iff some value vanishes and all later ones do too.
    bool vanishes_within_bound() const {
        return last_nonzero() < bound;
    }

    std::string str() const;
};

/// dim_K (R/I)_j for j = 0..D by standard-monomial enumeration.
HilbertFunction hilbert_by_enumeration(const MonomialIdeal& I, int D);

/// Same values by the pivot-variable recursion
/// HF(R/I)_j = HF(R/(I + x_i))_j + HF(R/(I : x_i))_{j-1}.
HilbertFunction hilbert_by_recursion(const MonomialIdeal& I, int D);

/// Runs both algorithms; a disagreement is a hard internal error.
HilbertFunction hilbert_function(const MonomialIdeal& I, int D);

}  // namespace ginred
