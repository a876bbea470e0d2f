#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ginred/fields.hpp"

namespace ginred {

template <FieldContext K>
struct Ring {
    int nvars;
    std::vector<std::string> names;
    K field;
};

template <FieldContext K>
using RingPtr = std::shared_ptr<const Ring<K>>;

inline std::vector<std::string> default_names(int n, const std::string& stem = "x") {
    std::vector<std::string> names;
    names.reserve(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
    return names;
}

template <FieldContext K>
RingPtr<K> make_ring(std::vector<std::string> names, K field) {
    if (names.empty()) throw Error("a ring needs at least one variable");
    for (size_t i = 0; i < names.size(); ++i)
        for (size_t j = i + 1; j < names.size(); ++j)
            if (names[i] == names[j]) throw Error("duplicate variable name '" + names[i] + "'");
    int n = static_cast<int>(names.size());
    return std::make_shared<Ring<K>>(Ring<K>{n, std::move(names), std::move(field)});
}

template <FieldContext K>
RingPtr<K> make_ring(int n, K field) {
    return make_ring(default_names(n), std::move(field));
}

template <FieldContext K>
bool same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
    if (a == b) return true;
    return a && b && a->nvars == b->nvars && a->names == b->names && a->field == b->field;
}

template <FieldContext K>
void require_same_ring(const RingPtr<K>& a, const RingPtr<K>& b) {
    if (!same_ring(a, b)) throw Error("mismatched ring contexts");
}

}  // namespace ginred
