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

// Dense linear algebra over the coefficient fields of this library.
//
// Two elimination schemes:
//   * Bareiss (fraction free) for exact entries. Over a series field the exact
//     elements are Laurent polynomials, and the Bareiss quotients are exact
//     polynomial divisions, so rank and kernels are decided exactly.
//   * Division with pivot inverses for solving. Over a series field the pivot
//     is an entry of least valuation and inverses are taken to a working
//     relative precision; precision loss shows up in the result's O-terms.

#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "cda/base_fields.hpp"
#include "cda/error.hpp"
#include "cda/series.hpp"

namespace cda {

template <class E>
using Matrix = std::vector<std::vector<E>>;

template <class F>
[[nodiscard]] Matrix<typename F::element_type> identity_matrix(const F& field, std::size_t n) {
    Matrix<typename F::element_type> m(n, std::vector<typename F::element_type>(n, field.zero()));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = field.one();
    return m;
}

namespace detail {

/// Zero that carries no precision information, safe to skip in products.
inline bool is_structural_zero(const Rational& x) { return x.is_zero(); }
inline bool is_structural_zero(const PrimeFieldElement& x) { return x.is_zero(); }
template <class C>
bool is_structural_zero(const Series<C>& s) {
    return s.is_exact_zero();
}

inline bool is_exact_entry(const Rational&) { return true; }
inline bool is_exact_entry(const PrimeFieldElement&) { return true; }
template <class C>
bool is_exact_entry(const Series<C>& s) {
    return s.is_exact();
}

/// Lower is a better pivot; nullopt means unusable (zero to known precision).
inline std::optional<Rational> pivot_score(const Rational& x) {
    return x.is_zero() ? std::nullopt : std::optional<Rational>(Rational(0));
}
inline std::optional<Rational> pivot_score(const PrimeFieldElement& x) {
    return x.is_zero() ? std::nullopt : std::optional<Rational>(Rational(0));
}
template <class C>
std::optional<Rational> pivot_score(const Series<C>& s) {
    if (s.is_zero()) return std::nullopt;
    return s.terms().begin()->first;
}

inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline PrimeFieldElement exact_quotient(const PrimeFieldElement& a, const PrimeFieldElement& b) { return a / b; }

/// a / b for exact series known to divide exactly (Laurent polynomial
/// division from the lowest term).
template <class C>
Series<C> exact_quotient(const Series<C>& a, const Series<C>& b) {
    if (!a.is_exact() || !b.is_exact()) throw Error("exact division needs exact series");
    if (b.is_zero()) throw Error("division by zero");
    const auto& field = a.field();
    if (a.is_zero()) return field.zero();
    const auto& [vb, lb] = *b.terms().begin();
    const Rational top = a.terms().rbegin()->first - b.terms().rbegin()->first;
    const auto lead_inv = lb.inverse();
    typename Series<C>::Terms q;
    Series<C> rem = a;
    while (!rem.is_zero()) {
        const auto& [vr, lr] = *rem.terms().begin();
        const Rational e = vr - vb;
        if (e > top) throw InternalError("inexact division in fraction-free elimination");
        const auto c = lr * lead_inv;
        q.emplace(e, c);
        rem -= b.shifted(e).scaled(c);
    }
    return field.from_terms(std::move(q));
}

/// Inverse of a pivot. Series are inverted to `relative` terms past their
/// valuation, capped by what a truncated pivot can support.
inline Rational pivot_inverse(const Rational& x, const Rational&) { return x.inverse(); }
inline PrimeFieldElement pivot_inverse(const PrimeFieldElement& x, const Rational&) { return x.inverse(); }
template <class C>
Series<C> pivot_inverse(const Series<C>& s, const Rational& relative) {
    const Rational v = s.terms().begin()->first;
    Rational rel = relative;
    if (s.precision() && *s.precision() - v < rel) rel = *s.precision() - v;
    return invert(s, rel - v);
}

template <class E>
std::optional<std::size_t> choose_pivot(const Matrix<E>& m, std::size_t col, std::size_t from) {
    std::optional<std::size_t> best;
    std::optional<Rational> best_score;
    for (std::size_t r = from; r < m.size(); ++r) {
        auto sc = pivot_score(m[r][col]);
        if (sc && (!best_score || *sc < *best_score)) {
            best = r;
            best_score = std::move(sc);
        }
    }
    return best;
}

}  // namespace detail

template <class F>
[[nodiscard]] std::vector<typename F::element_type> mat_vec(const F& field, const Matrix<typename F::element_type>& m,
                                                             const std::vector<typename F::element_type>& x) {
    std::vector<typename F::element_type> out(m.size(), field.zero());
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i].size() != x.size()) throw Error("matrix/vector dimension mismatch");
        for (std::size_t j = 0; j < x.size(); ++j) {
            if (!detail::is_structural_zero(m[i][j]) && !detail::is_structural_zero(x[j])) out[i] += m[i][j] * x[j];
        }
    }
    return out;
}

template <class E>
struct Echelon {
    Matrix<E> rows;
    std::vector<std::size_t> pivot_cols;
    [[nodiscard]] std::size_t rank() const { return pivot_cols.size(); }
};

template <class E>
[[nodiscard]] bool is_exact_matrix(const Matrix<E>& m) {
    for (const auto& row : m) {
        for (const auto& x : row) {
            if (!detail::is_exact_entry(x)) return false;
        }
    }
    return true;
}

/// Row echelon form by Bareiss elimination. All entries must be exact.
template <class F>
[[nodiscard]] Echelon<typename F::element_type> bareiss_echelon(const F& field, Matrix<typename F::element_type> m) {
    using E = typename F::element_type;
    if (!is_exact_matrix(m)) throw Error("fraction-free elimination needs exact entries");
    Echelon<E> out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    E prev = field.one();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const auto piv = detail::choose_pivot(m, c, r);
        if (!piv) continue;
        std::swap(m[r], m[*piv]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                E x = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                m[i][j] = detail::exact_quotient(x, prev);
            }
            m[i][c] = field.zero();
        }
        prev = m[r][c];
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rows = std::move(m);
    return out;
}

/// Row echelon form using pivot inverses; series pivots have least valuation.
template <class F>
[[nodiscard]] Echelon<typename F::element_type> division_echelon(const F& field, Matrix<typename F::element_type> m,
                                                                 const Rational& relative = 40) {
    using E = typename F::element_type;
    Echelon<E> out;
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const auto piv = detail::choose_pivot(m, c, r);
        if (!piv) continue;
        std::swap(m[r], m[*piv]);
        const E inv = detail::pivot_inverse(m[r][c], relative);
        for (std::size_t j = c; j < cols; ++j) {
            if (!detail::is_structural_zero(m[r][j])) m[r][j] = m[r][j] * inv;
        }
        m[r][c] = field.one();
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || detail::is_structural_zero(m[i][c])) continue;
            const E factor = m[i][c];
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (!detail::is_structural_zero(m[r][j])) m[i][j] -= factor * m[r][j];
            }
            m[i][c] = field.zero();
        }
        out.pivot_cols.push_back(c);
        ++r;
    }
    out.rows = std::move(m);
    return out;
}

/// Rank; exact via Bareiss when possible, otherwise to precision.
template <class F>
[[nodiscard]] std::size_t rank(const F& field, const Matrix<typename F::element_type>& m) {
    return is_exact_matrix(m) ? bareiss_echelon(field, m).rank() : division_echelon(field, m).rank();
}

/// Basis of {x : m·x = 0}. Exact matrices yield exact, denominator-free
/// kernel vectors.
template <class F>
[[nodiscard]] std::vector<std::vector<typename F::element_type>> kernel(const F& field,
                                                                      const Matrix<typename F::element_type>& m) {
    using E = typename F::element_type;
    if (m.empty()) return {};
    const std::size_t cols = m[0].size();
    const bool exact = is_exact_matrix(m);
    const auto ech = exact ? bareiss_echelon(field, m) : division_echelon(field, m);
    std::vector<bool> is_pivot(cols, false);
    for (auto c : ech.pivot_cols) is_pivot[c] = true;

    std::vector<std::vector<E>> basis;
    for (std::size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        // x = numerators / common denominator; clear the denominator as we go.
        std::vector<E> x(cols, field.zero());
        x[free] = field.one();
        for (std::size_t k = ech.rank(); k-- > 0;) {
            const std::size_t c = ech.pivot_cols[k];
            const auto& row = ech.rows[k];
            E acc = field.zero();
            for (std::size_t j = c + 1; j < cols; ++j) {
                if (!detail::is_structural_zero(row[j]) && !detail::is_structural_zero(x[j])) acc += row[j] * x[j];
            }
            const E& p = row[c];
            if (exact) {
                for (auto& xi : x) {
                    if (!detail::is_structural_zero(xi)) xi = xi * p;
                }
                x[c] = -acc;
            } else {
                x[c] = -acc * detail::pivot_inverse(p, Rational(40));
            }
        }
        basis.push_back(std::move(x));
    }
    return basis;
}

/// Solves a·x = b; nullopt when a is singular (to precision for series).
template <class F>
[[nodiscard]] std::optional<std::vector<typename F::element_type>> solve(const F& field,
                                                                          const Matrix<typename F::element_type>& a,
                                                                          const std::vector<typename F::element_type>& b,
                                                                          const Rational& relative = 40) {
    using E = typename F::element_type;
    const std::size_t n = a.size();
    if (b.size() != n) throw Error("right-hand side has the wrong length");
    Matrix<E> aug = a;
    for (std::size_t i = 0; i < n; ++i) {
        if (aug[i].size() != n) throw Error("solve needs a square matrix");
        aug[i].push_back(b[i]);
    }
    const auto ech = division_echelon(field, std::move(aug), relative);
    if (ech.rank() < n || ech.pivot_cols.back() >= n) return std::nullopt;
    std::vector<E> x;
    x.reserve(n);
    for (std::size_t i = 0; i < n; ++i) x.push_back(ech.rows[i][n]);
    return x;
}

}  // namespace cda
