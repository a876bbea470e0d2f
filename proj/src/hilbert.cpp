#include "ginred/hilbert.hpp"

#include <algorithm>

#include "ginred/fields.hpp"

namespace ginred {

std::string HilbertFunction::str() const {
    std::string s;
    for (int j = 0; j <= bound; ++j)
        s += (j ? " " : "") + std::to_string(values[static_cast<size_t>(j)]);
    return s;
}

HilbertFunction hilbert_by_enumeration(const MonomialIdeal& I, int D) {
    HilbertFunction hf{D, std::vector<long long>(static_cast<size_t>(D) + 1, 0)};
    for (int j = 0; j <= D; ++j) {
        long long count = 0;
        for (const auto& m : monomials_of_degree(I.nvars(), j))
            if (!I.contains(m)) ++count;
        hf.values[static_cast<size_t>(j)] = count;
    }
    return hf;
}

namespace {

void recurse(const MonomialIdeal& I, int D, int shift, std::vector<long long>& acc) {
    if (shift > D) return;
    if (I.is_unit()) return;
    int n = I.nvars();

    // base case: every generator is a variable, so R/I is a polynomial ring
    if (I.max_generator_degree() <= 1) {
        int free_vars = n - static_cast<int>(I.generators().size());
        for (int j = shift; j <= D; ++j)
            acc[static_cast<size_t>(j)] += count_monomials(free_vars, j - shift);
        return;
    }

    // pivot on the variable hit by the most generators of degree >= 2; both
    // branches then strictly shrink the generator degree sum
    std::vector<int> hits(static_cast<size_t>(n), 0);
    for (const auto& g : I.generators()) {
        if (g.degree() < 2) continue;
        for (int i = 0; i < n; ++i)
            if (g[i] > 0) ++hits[static_cast<size_t>(i)];
    }
    int pivot = static_cast<int>(std::max_element(hits.begin(), hits.end()) - hits.begin());

    recurse(I.plus_variable(pivot), D, shift, acc);
    recurse(I.quotient_by_variable(pivot), D, shift + 1, acc);
}

}  // namespace

HilbertFunction hilbert_by_recursion(const MonomialIdeal& I, int D) {
    HilbertFunction hf{D, std::vector<long long>(static_cast<size_t>(D) + 1, 0)};
    recurse(I, D, 0, hf.values);
    return hf;
}

HilbertFunction hilbert_function(const MonomialIdeal& I, int D) {
    if (D < 0) throw Error("negative degree bound");
    HilbertFunction a = hilbert_by_enumeration(I, D);
    HilbertFunction b = hilbert_by_recursion(I, D);
    if (!(a == b))
        throw Error("internal error: Hilbert function algorithms disagree (" + a.str() + " vs " +
                    b.str() + ")");
    return a;
}

}  // namespace ginred
