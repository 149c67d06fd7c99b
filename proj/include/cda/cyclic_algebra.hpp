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
 * @file cyclic_algebra.hpp
 * @brief Cyclic algebras (K/F, σ₀, α) over a Kummer extension K = F(u).
 *
 * D = K ⊕ KX ⊕ ... ⊕ KX^{q-1} with X^q = α and X·b = σ₀(b)·X. Coordinates
 * are taken in the F-basis u^i X^j, stored at index i + q·j.
 */

#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cda/error.hpp"
#include "cda/kummer.hpp"
#include "cda/linear_algebra.hpp"
#include "cda/structure_constants.hpp"

namespace cda {

/// Thrown when an inverse is requested for a zero divisor; carries a
/// nonzero kernel vector of left multiplication.
class ZeroDivisorError : public Error {
public:
    ZeroDivisorError(const std::string& what, std::string kernel) : Error(what), kernel_(std::move(kernel)) {}
    [[nodiscard]] const std::string& kernel() const noexcept { return kernel_; }

private:
    std::string kernel_;
};

template <class F>
class AlgebraElement;

template <class F>
class CyclicAlgebra {
public:
    using field_type = F;
    using element_type = typename F::element_type;

    CyclicAlgebra(KummerContext<F> kummer, element_type alpha) : k_(std::move(kummer)), alpha_(std::move(alpha)) {
        if (alpha_.is_zero()) throw Error("alpha must be nonzero");
    }

    [[nodiscard]] const KummerContext<F>& kummer() const noexcept { return k_; }
    [[nodiscard]] const F& field() const noexcept { return k_.field(); }
    [[nodiscard]] const element_type& alpha() const noexcept { return alpha_; }
    [[nodiscard]] unsigned q() const noexcept { return k_.q(); }
    [[nodiscard]] std::size_t n() const noexcept { return static_cast<std::size_t>(q()) * q(); }
    [[nodiscard]] std::size_t index(unsigned i, unsigned j) const { return i + static_cast<std::size_t>(q()) * j; }

    /// "1", "u", "u^2", "X", "uX", ..., "u^2X^2".
    [[nodiscard]] std::string label(std::size_t idx) const {
        const unsigned i = static_cast<unsigned>(idx % q()), j = static_cast<unsigned>(idx / q());
        auto part = [](const char* v, unsigned e) -> std::string {
            if (e == 0) return "";
            return e == 1 ? std::string(v) : std::string(v) + "^" + std::to_string(e);
        };
        const std::string s = part("u", i) + part("X", j);
        return s.empty() ? "1" : s;
    }
    [[nodiscard]] std::vector<std::string> labels() const {
        std::vector<std::string> out;
        for (std::size_t k = 0; k < n(); ++k) out.push_back(label(k));
        return out;
    }

    [[nodiscard]] AlgebraElement<F> element(std::vector<element_type> coords) const;
    [[nodiscard]] AlgebraElement<F> zero() const { return element(std::vector<element_type>(n(), field().zero())); }
    [[nodiscard]] AlgebraElement<F> basis(std::size_t idx) const {
        auto c = std::vector<element_type>(n(), field().zero());
        c.at(idx) = field().one();
        return element(std::move(c));
    }
    [[nodiscard]] AlgebraElement<F> one() const { return basis(0); }
    [[nodiscard]] AlgebraElement<F> u() const { return basis(index(1, 0)); }
    [[nodiscard]] AlgebraElement<F> x() const { return basis(index(0, 1)); }
    [[nodiscard]] AlgebraElement<F> scalar(const element_type& f) const {
        auto c = std::vector<element_type>(n(), field().zero());
        c[0] = f;
        return element(std::move(c));
    }
    /// b ∈ K as b·X^0.
    [[nodiscard]] AlgebraElement<F> embed(const KummerElement<F>& b) const {
        auto c = std::vector<element_type>(n(), field().zero());
        for (unsigned i = 0; i < q(); ++i) c[i] = b[i];
        return element(std::move(c));
    }

    [[nodiscard]] std::string describe() const {
        return "(K/F, sigma, " + alpha_.to_string() + ") with K = " + k_.describe();
    }

    friend bool operator==(const CyclicAlgebra& a, const CyclicAlgebra& b) {
        return a.k_ == b.k_ && equal_to_precision(a.alpha_, b.alpha_);
    }

private:
    KummerContext<F> k_;
    element_type alpha_;
};

template <class F>
class AlgebraElement {
public:
    using element_type = typename F::element_type;

    AlgebraElement(CyclicAlgebra<F> algebra, std::vector<element_type> coords)
        : alg_(std::move(algebra)), coords_(std::move(coords)) {
        if (coords_.size() != alg_.n()) throw Error("expected " + std::to_string(alg_.n()) + " coordinates");
    }

    [[nodiscard]] const CyclicAlgebra<F>& algebra() const noexcept { return alg_; }
    [[nodiscard]] const std::vector<element_type>& coords() const noexcept { return coords_; }
    [[nodiscard]] const element_type& operator[](std::size_t i) const { return coords_[i]; }
    [[nodiscard]] bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return c.is_zero(); });
    }
    [[nodiscard]] bool is_exact() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const auto& c) { return detail::is_exact_entry(c); });
    }

    friend AlgebraElement operator+(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_same(b);
        auto c = a.coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
        return {a.alg_, std::move(c)};
    }
    friend AlgebraElement operator-(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_same(b);
        auto c = a.coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
        return {a.alg_, std::move(c)};
    }
    friend AlgebraElement operator*(const element_type& f, const AlgebraElement& a) {
        auto c = a.coords_;
        for (auto& x : c) {
            if (!detail::is_structural_zero(x)) x = f * x;
        }
        return {a.alg_, std::move(c)};
    }
    /// (u^i X^j)(u^k X^l) = ξ^{jk} u^{i+k} X^{j+l}, u^q = t, X^q = α.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check_same(b);
        const auto& alg = a.alg_;
        const auto& ctx = alg.kummer();
        const unsigned q = alg.q();
        std::vector<element_type> out(alg.n(), alg.field().zero());
        for (unsigned j = 0; j < q; ++j) {
            for (unsigned i = 0; i < q; ++i) {
                const auto& x = a.coords_[alg.index(i, j)];
                if (detail::is_structural_zero(x)) continue;
                for (unsigned l = 0; l < q; ++l) {
                    for (unsigned k = 0; k < q; ++k) {
                        const auto& y = b.coords_[alg.index(k, l)];
                        if (detail::is_structural_zero(y)) continue;
                        auto c = x * y;
                        const long jk = static_cast<long>(j) * k;
                        if (jk % q != 0) c = ctx.xi_power(jk) * c;
                        unsigned ui = i + k, xj = j + l;
                        if (ui >= q) {
                            ui -= q;
                            c = c * ctx.t();
                        }
                        if (xj >= q) {
                            xj -= q;
                            c = c * alg.alpha();
                        }
                        out[alg.index(ui, xj)] += c;
                    }
                }
            }
        }
        return {alg, std::move(out)};
    }

    [[nodiscard]] AlgebraElement pow(unsigned e) const {
        AlgebraElement r = alg_.one();
        for (unsigned k = 0; k < e; ++k) r = r * *this;
        return r;
    }

    /// "[c_1; ...; c_n]" in basis order.
    [[nodiscard]] std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "; " : "") + coords_[i].to_string();
        return s + "]";
    }
    /// "c*u^iX^j + ..." skipping zero coordinates.
    [[nodiscard]] std::string to_display() const {
        std::string s;
        for (std::size_t i = 0; i < coords_.size(); ++i) {
            if (coords_[i].is_zero() && detail::is_structural_zero(coords_[i])) continue;
            if (!s.empty()) s += " + ";
            s += "(" + coords_[i].to_string() + ")";
            if (i != 0) s += "*" + alg_.label(i);
        }
        return s.empty() ? "0" : s;
    }

private:
    void check_same(const AlgebraElement& o) const {
        if (!(alg_ == o.alg_)) throw DomainMismatch("elements of different cyclic algebras");
    }

    CyclicAlgebra<F> alg_;
    std::vector<element_type> coords_;
};

template <class F>
AlgebraElement<F> CyclicAlgebra<F>::element(std::vector<element_type> coords) const {
    return {*this, std::move(coords)};
}

template <class F>
[[nodiscard]] AlgebraElement<F> relation_mul(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
    return a * b;
}

template <class F>
[[nodiscard]] bool equal_to_precision(const AlgebraElement<F>& a, const AlgebraElement<F>& b) {
    return vectors_equal_to_precision(a.coords(), b.coords());
}

template <class F>
[[nodiscard]] StructureConstants<F> structure_constants(const CyclicAlgebra<F>& d) {
    return StructureConstants<F>(d.field(), d.labels(),
                                 [&](std::size_t i, std::size_t j) { return (d.basis(i) * d.basis(j)).coords(); });
}

/// Matrix of x ↦ d·x; column j holds d·c_j.
template <class F>
[[nodiscard]] Matrix<typename F::element_type> left_mul_matrix(const AlgebraElement<F>& d) {
    const auto& alg = d.algebra();
    const std::size_t n = alg.n();
    Matrix<typename F::element_type> m(n, std::vector<typename F::element_type>(n, alg.field().zero()));
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = d * alg.basis(j);
        for (std::size_t k = 0; k < n; ++k) m[k][j] = col[k];
    }
    return m;
}

/// Matrix of x ↦ x·d.
template <class F>
[[nodiscard]] Matrix<typename F::element_type> right_mul_matrix(const AlgebraElement<F>& d) {
    const auto& alg = d.algebra();
    const std::size_t n = alg.n();
    Matrix<typename F::element_type> m(n, std::vector<typename F::element_type>(n, alg.field().zero()));
    for (std::size_t j = 0; j < n; ++j) {
        const auto col = alg.basis(j) * d;
        for (std::size_t k = 0; k < n; ++k) m[k][j] = col[k];
    }
    return m;
}

/// Nonzero x with d·x = 0 (exact when d is exact), or nullopt.
template <class F>
[[nodiscard]] std::optional<AlgebraElement<F>> left_annihilated(const AlgebraElement<F>& d) {
    auto ker = kernel(d.algebra().field(), left_mul_matrix(d));
    if (ker.empty()) return std::nullopt;
    return d.algebra().element(std::move(ker.front()));
}

/// d^{-1} by solving d·x = 1. Over series fields x is returned to O(t^target)
/// and both d·x and x·d are checked against 1 to that precision.
template <class F>
[[nodiscard]] AlgebraElement<F> invert(const AlgebraElement<F>& d, const Rational& target = 20) {
    const auto& alg = d.algebra();
    if (d.is_zero()) throw Error("inverse of zero");
    const auto lm = left_mul_matrix(d);
    const auto rhs = alg.one().coords();
    Rational relative = target + 10;
    for (int attempt = 0; attempt < 6; ++attempt, relative = relative * Rational(2)) {
        auto sol = solve(alg.field(), lm, rhs, relative);
        if (!sol) {
            auto ker = kernel(alg.field(), lm);
            const std::string kt = ker.empty() ? "" : alg.element(ker.front()).to_string();
            throw ZeroDivisorError("element is a zero divisor: " + d.to_string(), kt);
        }
        auto x = alg.element(std::move(*sol));
        if constexpr (is_series_field_v<F>) {
            std::vector<typename F::element_type> c;
            bool enough = true;
            for (const auto& e : x.coords()) {
                if (e.precision() && *e.precision() < target) enough = false;
                c.push_back(e.truncated(target));
            }
            if (!enough) continue;
            x = alg.element(std::move(c));
        }
        const auto dx = d * x, xd = x * d;
        if (!equal_to_precision(dx, alg.one()) || !equal_to_precision(xd, alg.one())) {
            throw InternalError("inverse failed its round trip: " + d.to_string());
        }
        return x;
    }
    throw PrecisionError("could not reach O(t^" + target.to_string() + ") for the inverse of " + d.to_string());
}

/// Division certificate: D is division iff α is not a norm from K.
template <class F>
struct DivisionCertificate {
    bool is_division = false;
    NormDecision<F> norm;
};

template <class F>
    requires is_series_field_v<F>
[[nodiscard]] DivisionCertificate<F> is_division(const CyclicAlgebra<F>& d) {
    DivisionCertificate<F> c;
    c.norm = is_norm(d.kummer(), d.alpha());
    c.is_division = !c.norm.is_norm;
    return c;
}

/// (X - β, Σ β^{q-1-i} X^i) for α = β^q.
template <class F>
[[nodiscard]] std::pair<AlgebraElement<F>, AlgebraElement<F>> zero_divisor_witness(const CyclicAlgebra<F>& d,
                                                                                   const typename F::element_type& beta) {
    const unsigned q = d.q();
    if (!equal_to_precision(beta.pow(static_cast<long>(q)), d.alpha())) {
        throw Error("beta^q != alpha: " + beta.to_string());
    }
    auto left = d.x() - d.scalar(beta);
    auto right = d.zero();
    for (unsigned i = 0; i < q; ++i) right = right + beta.pow(static_cast<long>(q - 1 - i)) * d.x().pow(i);
    return {std::move(left), std::move(right)};
}

/// For α = N(a): with c = σ(a)···σ^{q-1}(a) we have a^{-1} = c/N(a), and
/// y = a^{-1}X satisfies y^q = 1. Returns N·(y - 1) and N^{q-1}·Σ y^k, both
/// free of denominators, whose product is N^q(y^q - 1) = 0.
template <class F>
[[nodiscard]] std::pair<AlgebraElement<F>, AlgebraElement<F>> norm_zero_divisor_witness(const CyclicAlgebra<F>& d,
                                                                                        const KummerElement<F>& a) {
    const unsigned q = d.q();
    const auto n = norm_oracle(a);
    if (!equal_to_precision(n, d.alpha())) throw Error("N(a) != alpha for a = " + a.to_string());
    auto c = galois_sigma(a, 1);
    for (unsigned k = 2; k < q; ++k) c = c * galois_sigma(a, k);

    auto left = d.embed(c) * d.x() - d.scalar(n);
    auto right = d.zero();
    auto prod = d.kummer().one();  // c σ(c) ··· σ^{k-1}(c)
    for (unsigned k = 0; k < q; ++k) {
        right = right + n.pow(static_cast<long>(q - 1 - k)) * (d.embed(prod) * d.x().pow(k));
        prod = prod * galois_sigma(c, k);
    }
    return {std::move(left), std::move(right)};
}

/// dim_F of {x : ux = xu, Xx = xX}.
template <class F>
[[nodiscard]] std::size_t center_dimension(const CyclicAlgebra<F>& d) {
    const auto lu = left_mul_matrix(d.u()), ru = right_mul_matrix(d.u());
    const auto lx = left_mul_matrix(d.x()), rx = right_mul_matrix(d.x());
    Matrix<typename F::element_type> m;
    for (std::size_t i = 0; i < d.n(); ++i) {
        std::vector<typename F::element_type> r1, r2;
        for (std::size_t j = 0; j < d.n(); ++j) {
            r1.push_back(lu[i][j] - ru[i][j]);
            r2.push_back(lx[i][j] - rx[i][j]);
        }
        m.push_back(std::move(r1));
        m.push_back(std::move(r2));
    }
    return kernel(d.field(), m).size();
}

}  // namespace cda
