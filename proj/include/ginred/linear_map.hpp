/**
 * @file linear_map.hpp
 * @brief Invertible linear changes of coordinates acting as graded algebra maps:
 *        x_i is sent to the linear form with coefficients from row i.
 */
#pragma once

#include <vector>

#include "ginred/linalg.hpp"
#include "ginred/polynomial.hpp"

namespace ginred {

template <FieldContext K>
class LinearMap {
public:
    LinearMap(RingPtr<K> ring, Matrix<K> g) : ring_(std::move(ring)), g_(std::move(g)) {
        if (g_.rows() != ring_->nvars || g_.cols() != ring_->nvars)
            throw Error("linear map shape does not match the ring");
        if (ring_->field.is_zero(determinant(g_, ring_->field)))
            throw Error("singular matrix rejected for a change of coordinates");
    }

    static LinearMap identity(RingPtr<K> ring) {
        const K& F = ring->field;
        Matrix<K> g(ring->nvars, ring->nvars, F.zero());
        for (int i = 0; i < ring->nvars; ++i) g.at(i, i) = F.one();
        return LinearMap(std::move(ring), std::move(g));
    }

    const RingPtr<K>& ring() const { return ring_; }
    const Matrix<K>& matrix() const { return g_; }

    Poly<K> apply(const Poly<K>& f) const {
        require_same_ring(ring_, f.ring());
        const K& F = ring_->field;
        int n = ring_->nvars;

        std::vector<Poly<K>> images;
        images.reserve(static_cast<size_t>(n));
        for (int i = 0; i < n; ++i) {
            std::vector<typename Poly<K>::Term> ts;
            for (int j = 0; j < n; ++j)
                if (!F.is_zero(g_.at(i, j))) ts.push_back({Monomial::variable(n, j), g_.at(i, j)});
            images.push_back(Poly<K>::from_terms(ring_, std::move(ts)));
        }

        // powers of variable images, grown on demand
        std::vector<std::vector<Poly<K>>> pows(static_cast<size_t>(n));
        auto image_power = [&](int i, int e) -> const Poly<K>& {
            auto& cache = pows[static_cast<size_t>(i)];
            if (cache.empty()) cache.push_back(Poly<K>::constant(ring_, F.one()));
            while (static_cast<int>(cache.size()) <= e)
                cache.push_back(cache.back() * images[static_cast<size_t>(i)]);
            return cache[static_cast<size_t>(e)];
        };

        Poly<K> out(ring_);
        for (const auto& t : f.terms()) {
            Poly<K> prod = Poly<K>::constant(ring_, t.coeff);
            for (int i = 0; i < n; ++i)
                if (t.mono[i] > 0) prod = prod * image_power(i, t.mono[i]);
            out = out + prod;
        }
        return out;
    }

    std::vector<Poly<K>> apply(std::span<const Poly<K>> polys) const {
        std::vector<Poly<K>> out;
        out.reserve(polys.size());
        for (const auto& f : polys) out.push_back(apply(f));
        return out;
    }

    LinearMap inverse() const {
        auto inv = ginred::inverse(g_, ring_->field);
        return LinearMap(ring_, std::move(*inv));
    }

    /// Composition acting as first `inner`, then this map.
    LinearMap after(const LinearMap& inner) const {
        require_same_ring(ring_, inner.ring_);
        return LinearMap(ring_, matmul(inner.g_, g_, ring_->field));
    }

private:
    RingPtr<K> ring_;
    Matrix<K> g_;
};

}  // namespace ginred
