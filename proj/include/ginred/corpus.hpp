/**
 * @file corpus.hpp
 * @brief Seeded random homogeneous ideals for randomized verification runs.
 */
#pragma once

#include <cstdint>

#include "ginred/gin.hpp"
#include "ginred/parse.hpp"

namespace ginred {

struct CorpusSpec {
    int count = 100;
    std::uint64_t seed = 1;
    int n_vars = 4;  // per-ideal variable count is drawn from [2, n_vars]
    int max_gens = 4;
    int max_degree = 3;
    int max_terms = 4;
    long long characteristic = 32003;

    void validate() const {
        if (count <= 0 || n_vars <= 0 || max_gens <= 0 || max_degree <= 0 || max_terms <= 0)
            throw Error("corpus parameters must be positive");
        if (characteristic != 0 && !Fp::is_prime(static_cast<std::uint64_t>(characteristic)))
            throw Error("corpus characteristic must be 0 or prime");
    }
};

template <FieldContext K>
struct CorpusIdeal {
    RingPtr<K> ring;
    std::vector<Poly<K>> gens;
    std::uint64_t seed = 0;
};

template <FieldContext K>
std::vector<Poly<K>> random_homogeneous_ideal(const RingPtr<K>& ring, Rng& rng, int max_gens,
                                              int max_degree, int max_terms) {
    const K& F = ring->field;
    std::vector<Poly<K>> gens;
    int count = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_gens)));
    for (int k = 0; k < count; ++k) {
        for (int attempt = 0; attempt < 16; ++attempt) {
            int d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree)));
            if (d == 1)  // linear generators are possible but rare
                d = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_degree)));
            auto basis = monomials_of_degree(ring->nvars, d);
            std::vector<typename Poly<K>::Term> terms;
            int nterms = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_terms)));
            for (int t = 0; t < nterms; ++t)
                terms.push_back({basis[rng.below(basis.size())], sample_nonzero(F, rng)});
            auto p = Poly<K>::from_terms(ring, std::move(terms));
            if (!p.is_zero()) {
                gens.push_back(std::move(p));
                break;
            }
        }
    }
    if (gens.empty()) gens.push_back(Poly<K>::var(ring, 0, 2));
    return gens;
}

template <FieldContext K>
CorpusIdeal<K> corpus_ideal(const CorpusSpec& spec, int index, K field) {
    std::uint64_t seed = mix_seed(spec.seed, static_cast<std::uint64_t>(index));
    Rng rng(seed);
    int n = spec.n_vars <= 2
                ? spec.n_vars
                : 2 + static_cast<int>(rng.below(static_cast<std::uint64_t>(spec.n_vars - 1)));
    RingPtr<K> ring = make_ring(n, std::move(field));
    auto gens = random_homogeneous_ideal(ring, rng, spec.max_gens, spec.max_degree, spec.max_terms);
    return {std::move(ring), std::move(gens), seed};
}

}  // namespace ginred
