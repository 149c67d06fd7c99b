/*
   Copyright 2026 The cda Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

/**
 * @file structure_constants.hpp
 * @brief Finite-dimensional algebras given by a multiplication table.
 *
 * For a basis c_1..c_n with c_i c_j = Σ_k λ_k^{ij} c_k, the product of
 * coordinate vectors a, b is the vector (a M_k bᵀ)_k with (M_k)_{ij} = λ_k^{ij}.
 * The table is stored sparsely by basis pair.
 */

#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cda/error.hpp"
#include "cda/linear_algebra.hpp"

namespace cda {

template <class F>
class StructureConstants {
public:
    using element_type = typename F::element_type;
    using Entry = std::pair<std::size_t, element_type>;  // (k, λ_k^{ij})

    /// Builds the table from a basis product c_i·c_j ↦ coordinates.
    StructureConstants(F field, std::vector<std::string> basis,
                       const std::function<std::vector<element_type>(std::size_t, std::size_t)>& product)
        : field_(std::move(field)), basis_(std::move(basis)) {
        const std::size_t n = basis_.size();
        table_.assign(n * n, {});
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto coords = product(i, j);
                if (coords.size() != n) throw Error("basis product has the wrong dimension");
                for (std::size_t k = 0; k < n; ++k) {
                    if (!coords[k].is_zero()) table_[i * n + j].emplace_back(k, coords[k]);
                }
            }
        }
    }

    /// From the matrices M_1..M_n.
    StructureConstants(F field, std::vector<std::string> basis, const std::vector<Matrix<element_type>>& matrices)
        : field_(std::move(field)), basis_(std::move(basis)) {
        const std::size_t n = basis_.size();
        if (matrices.size() != n) throw Error("expected " + std::to_string(n) + " structure matrices");
        table_.assign(n * n, {});
        for (std::size_t k = 0; k < n; ++k) {
            if (matrices[k].size() != n) throw Error("structure matrix has the wrong size");
            for (std::size_t i = 0; i < n; ++i) {
                if (matrices[k][i].size() != n) throw Error("structure matrix has the wrong size");
                for (std::size_t j = 0; j < n; ++j) {
                    if (!matrices[k][i][j].is_zero()) table_[i * n + j].emplace_back(k, matrices[k][i][j]);
                }
            }
        }
    }

    [[nodiscard]] const F& field() const noexcept { return field_; }
    [[nodiscard]] std::size_t n() const noexcept { return basis_.size(); }
    [[nodiscard]] const std::vector<std::string>& basis() const noexcept { return basis_; }
    [[nodiscard]] const std::vector<Entry>& product(std::size_t i, std::size_t j) const { return table_[i * n() + j]; }

    /// M_k with (M_k)_{ij} = λ_k^{ij}.
    [[nodiscard]] Matrix<element_type> matrix(std::size_t k) const {
        Matrix<element_type> m(n(), std::vector<element_type>(n(), field_.zero()));
        for (std::size_t i = 0; i < n(); ++i) {
            for (std::size_t j = 0; j < n(); ++j) {
                for (const auto& [kk, lambda] : product(i, j)) {
                    if (kk == k) m[i][j] = lambda;
                }
            }
        }
        return m;
    }

    /// The unit vector e_i.
    [[nodiscard]] std::vector<element_type> unit(std::size_t i) const {
        std::vector<element_type> v(n(), field_.zero());
        v.at(i) = field_.one();
        return v;
    }

private:
    F field_;
    std::vector<std::string> basis_;
    std::vector<std::vector<Entry>> table_;
};

/// (a M_1 bᵀ, ..., a M_n bᵀ).
template <class F>
[[nodiscard]] std::vector<typename F::element_type> constants_mul(const std::vector<typename F::element_type>& a,
                                                                  const std::vector<typename F::element_type>& b,
                                                                  const StructureConstants<F>& s) {
    const std::size_t n = s.n();
    if (a.size() != n || b.size() != n) throw Error("vector dimension does not match the structure constants");
    std::vector<typename F::element_type> out(n, s.field().zero());
    for (std::size_t i = 0; i < n; ++i) {
        if (detail::is_structural_zero(a[i])) continue;
        for (std::size_t j = 0; j < n; ++j) {
            if (detail::is_structural_zero(b[j])) continue;
            const auto& entries = s.product(i, j);
            if (entries.empty()) continue;
            const auto ab = a[i] * b[j];
            for (const auto& [k, lambda] : entries) out[k] += ab * lambda;
        }
    }
    return out;
}

template <class E>
[[nodiscard]] bool vectors_equal_to_precision(const std::vector<E>& a, const std::vector<E>& b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!equal_to_precision(a[i], b[i])) return false;
    }
    return true;
}

/// Associativity on all basis triples and e_unit as two-sided unit.
template <class F>
[[nodiscard]] bool is_associative_unital(const StructureConstants<F>& s, std::size_t unit = 0) {
    const std::size_t n = s.n();
    const auto one = s.unit(unit);
    for (std::size_t i = 0; i < n; ++i) {
        const auto ei = s.unit(i);
        if (!vectors_equal_to_precision(constants_mul(one, ei, s), ei)) return false;
        if (!vectors_equal_to_precision(constants_mul(ei, one, s), ei)) return false;
        for (std::size_t j = 0; j < n; ++j) {
            const auto ij = constants_mul(ei, s.unit(j), s);
            for (std::size_t k = 0; k < n; ++k) {
                const auto ek = s.unit(k);
                if (!vectors_equal_to_precision(constants_mul(ij, ek, s), constants_mul(ei, constants_mul(s.unit(j), ek, s), s))) {
                    return false;
                }
            }
        }
    }
    return true;
}

}  // namespace cda
