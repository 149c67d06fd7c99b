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
 * @file albert.hpp
 * @brief Quaternion and biquaternion algebras, the Albert form, and the
 *        ordered tower Q((X))((Y)) with 0 < Y < X.
 */

#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cda/error.hpp"
#include "cda/random.hpp"
#include "cda/series.hpp"
#include "cda/structure_constants.hpp"

namespace cda {

// ---------------------------------------------------------------------------
// Quaternions (u, v / F): i² = u, j² = v, ij = -ji
// ---------------------------------------------------------------------------

template <class F>
class QuaternionAlgebra {
public:
    using element_type = typename F::element_type;

    QuaternionAlgebra(F field, element_type u, element_type v) : field_(std::move(field)), u_(std::move(u)), v_(std::move(v)) {
        if (field_.characteristic() == 2) throw Error("quaternion algebras need characteristic != 2");
        if (u_.is_zero() || v_.is_zero()) throw Error("quaternion parameters must be nonzero");
    }

    [[nodiscard]] const F& field() const noexcept { return field_; }
    [[nodiscard]] const element_type& u() const noexcept { return u_; }
    [[nodiscard]] const element_type& v() const noexcept { return v_; }
    [[nodiscard]] std::string describe() const { return "(" + u_.to_string() + ", " + v_.to_string() + " / " + field_.describe() + ")"; }

    friend bool operator==(const QuaternionAlgebra& a, const QuaternionAlgebra& b) {
        return a.field_ == b.field_ && equal_to_precision(a.u_, b.u_) && equal_to_precision(a.v_, b.v_);
    }

private:
    F field_;
    element_type u_, v_;
};

/// a + b·i + c·j + d·ij.
template <class F>
struct Quaternion {
    using element_type = typename F::element_type;
    QuaternionAlgebra<F> algebra;
    std::array<element_type, 4> c;

    [[nodiscard]] bool is_zero() const {
        return c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero();
    }
    [[nodiscard]] std::string to_string() const {
        return "[" + c[0].to_string() + "; " + c[1].to_string() + "; " + c[2].to_string() + "; " + c[3].to_string() + "]";
    }
};

template <class F>
[[nodiscard]] Quaternion<F> make_quaternion(const QuaternionAlgebra<F>& h, typename F::element_type a,
                                            typename F::element_type b, typename F::element_type c,
                                            typename F::element_type d) {
    return {h, {std::move(a), std::move(b), std::move(c), std::move(d)}};
}

template <class F>
[[nodiscard]] Quaternion<F> quat_mul(const Quaternion<F>& x, const Quaternion<F>& y) {
    if (!(x.algebra == y.algebra)) throw DomainMismatch("quaternions from different algebras");
    const auto& u = x.algebra.u();
    const auto& v = x.algebra.v();
    const auto& [a1, b1, c1, d1] = x.c;
    const auto& [a2, b2, c2, d2] = y.c;
    const auto uv = u * v;
    return {x.algebra,
            {a1 * a2 + u * (b1 * b2) + v * (c1 * c2) - uv * (d1 * d2),
             a1 * b2 + b1 * a2 - v * (c1 * d2) + v * (d1 * c2),
             a1 * c2 + c1 * a2 + u * (b1 * d2) - u * (d1 * b2),
             a1 * d2 + d1 * a2 + b1 * c2 - c1 * b2}};
}

template <class F>
[[nodiscard]] Quaternion<F> operator*(const Quaternion<F>& x, const Quaternion<F>& y) {
    return quat_mul(x, y);
}

/// x·x̄ = a² - u·b² - v·c² + uv·d².
template <class F>
[[nodiscard]] typename F::element_type reduced_norm(const Quaternion<F>& x) {
    const auto& u = x.algebra.u();
    const auto& v = x.algebra.v();
    const auto& [a, b, c, d] = x.c;
    return a * a - u * (b * b) - v * (c * c) + (u * v) * (d * d);
}

template <class F>
[[nodiscard]] Quaternion<F> conjugate(const Quaternion<F>& x) {
    return {x.algebra, {x.c[0], -x.c[1], -x.c[2], -x.c[3]}};
}

/// Basis 1, i, j, ij.
template <class F>
[[nodiscard]] Quaternion<F> quaternion_basis(const QuaternionAlgebra<F>& h, std::size_t k) {
    Quaternion<F> q{h, {h.field().zero(), h.field().zero(), h.field().zero(), h.field().zero()}};
    q.c.at(k) = h.field().one();
    return q;
}

// ---------------------------------------------------------------------------
// Biquaternions D₁ ⊗ D₂
// ---------------------------------------------------------------------------

template <class F>
class BiquaternionAlgebra {
public:
    using element_type = typename F::element_type;
    using Vector = std::vector<element_type>;

    BiquaternionAlgebra(QuaternionAlgebra<F> d1, QuaternionAlgebra<F> d2)
        : d1_(std::move(d1)), d2_(std::move(d2)), constants_(build(d1_, d2_)) {}

    [[nodiscard]] const QuaternionAlgebra<F>& first() const noexcept { return d1_; }
    [[nodiscard]] const QuaternionAlgebra<F>& second() const noexcept { return d2_; }
    [[nodiscard]] const StructureConstants<F>& constants() const noexcept { return constants_; }
    [[nodiscard]] const F& field() const noexcept { return d1_.field(); }
    [[nodiscard]] static constexpr std::size_t n() { return 16; }

    [[nodiscard]] Vector mul(const Vector& a, const Vector& b) const { return constants_mul(a, b, constants_); }
    [[nodiscard]] Vector unit(std::size_t k) const { return constants_.unit(k); }
    [[nodiscard]] Vector one() const { return unit(0); }
    /// x ⊗ y as a 16-vector.
    [[nodiscard]] Vector tensor(const Quaternion<F>& x, const Quaternion<F>& y) const {
        Vector out;
        out.reserve(16);
        for (std::size_t s = 0; s < 4; ++s) {
            for (std::size_t t = 0; t < 4; ++t) out.push_back(x.c[s] * y.c[t]);
        }
        return out;
    }

private:
    static StructureConstants<F> build(const QuaternionAlgebra<F>& d1, const QuaternionAlgebra<F>& d2) {
        if (!(d1.field() == d2.field())) throw DomainMismatch("tensor factors over different fields");
        static const char* const names[4] = {"1", "i", "j", "ij"};
        std::vector<std::string> basis;
        for (std::size_t s = 0; s < 4; ++s) {
            for (std::size_t t = 0; t < 4; ++t) basis.push_back(std::string(names[s]) + "(x)" + names[t]);
        }
        return StructureConstants<F>(d1.field(), basis, [&](std::size_t i, std::size_t j) {
            const auto e = quat_mul(quaternion_basis(d1, i / 4), quaternion_basis(d1, j / 4));
            const auto f = quat_mul(quaternion_basis(d2, i % 4), quaternion_basis(d2, j % 4));
            std::vector<typename F::element_type> out;
            for (std::size_t s = 0; s < 4; ++s) {
                for (std::size_t t = 0; t < 4; ++t) out.push_back(e.c[s] * f.c[t]);
            }
            return out;
        });
    }

    QuaternionAlgebra<F> d1_, d2_;
    StructureConstants<F> constants_;
};

template <class F>
[[nodiscard]] BiquaternionAlgebra<F> tensor_product(const QuaternionAlgebra<F>& d1, const QuaternionAlgebra<F>& d2) {
    return {d1, d2};
}

// ---------------------------------------------------------------------------
// Albert form
// ---------------------------------------------------------------------------

/// φ = c₁a₁² + ... + c₆a₆² with c = (u, v, -uv, -u', -v', u'v').
template <class F>
struct AlbertForm {
    using element_type = typename F::element_type;
    std::array<element_type, 6> coefficients;

    /// φ(a) for a over F, or over any ring R with F → R given by `lift`.
    template <class R, class Lift>
    [[nodiscard]] R evaluate(const std::array<R, 6>& a, Lift lift) const {
        R acc = lift(coefficients[0]) * (a[0] * a[0]);
        for (std::size_t i = 1; i < 6; ++i) acc = acc + lift(coefficients[i]) * (a[i] * a[i]);
        return acc;
    }
    [[nodiscard]] element_type evaluate(const std::array<element_type, 6>& a) const {
        return evaluate(a, [](const element_type& x) { return x; });
    }
    [[nodiscard]] std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < 6; ++i) s += (i ? ", " : "") + coefficients[i].to_string();
        return s + ")";
    }
};

template <class F>
[[nodiscard]] AlbertForm<F> albert_form(const QuaternionAlgebra<F>& d1, const QuaternionAlgebra<F>& d2) {
    if (!(d1.field() == d2.field())) throw DomainMismatch("Albert form of algebras over different fields");
    const auto& u = d1.u();
    const auto& v = d1.v();
    const auto& u2 = d2.u();
    const auto& v2 = d2.v();
    return {{u, v, -(u * v), -u2, -v2, u2 * v2}};
}

// ---------------------------------------------------------------------------
// Quadratic extensions F(γ), γ² = g
// ---------------------------------------------------------------------------

template <class F>
class QuadraticExtension {
public:
    using base_type = typename F::element_type;

    /// b + γ·c.
    struct Element {
        base_type g;  // γ²
        base_type b, c;

        friend Element operator+(const Element& x, const Element& y) { return {x.g, x.b + y.b, x.c + y.c}; }
        friend Element operator*(const Element& x, const Element& y) {
            return {x.g, x.b * y.b + x.g * (x.c * y.c), x.b * y.c + x.c * y.b};
        }
        [[nodiscard]] bool is_zero() const { return b.is_zero() && c.is_zero(); }
        [[nodiscard]] std::string to_string() const { return "(" + b.to_string() + ") + gamma*(" + c.to_string() + ")"; }
    };

    /// Requires g to be a certified non-square, so that F(γ) is a field.
    QuadraticExtension(F field, base_type g) : field_(std::move(field)), g_(std::move(g)) {
        if constexpr (is_series_field_v<F>) {
            if (is_square_in_tower(g_)) throw Error(g_.to_string() + " is a square; F(gamma) is not a field");
        } else {
            if (qth_root(g_, 2)) throw Error(g_.to_string() + " is a square; F(gamma) is not a field");
        }
    }

    [[nodiscard]] const F& field() const noexcept { return field_; }
    [[nodiscard]] const base_type& gamma_squared() const noexcept { return g_; }
    [[nodiscard]] Element element(base_type b, base_type c) const { return {g_, std::move(b), std::move(c)}; }
    [[nodiscard]] Element lift(const base_type& b) const { return {g_, b, field_.zero()}; }
    [[nodiscard]] std::string describe() const { return field_.describe() + "(gamma), gamma^2 = " + g_.to_string(); }

private:
    F field_;
    base_type g_;
};

// ---------------------------------------------------------------------------
// The ordered tower Q((X))((Y)), 0 < Y < X
// ---------------------------------------------------------------------------

/// sign(ac_X(ac_Y(s))); 0 for the zero series.
[[nodiscard]] inline int sign_q2(const Series<SeriesField<RationalField>>& s) {
    if (s.is_exact_zero()) return 0;
    return angular_component(angular_component(s)).sign();
}

/// Leading data of a sum of squares s = Σ x_i².
struct SosLeadingData {
    Rational v_y;         // v_Y(s)
    std::string ac_y;     // ac_Y(s) ∈ Q((X))
    Rational v_x;         // v_X(ac_Y(s))
    Rational ac_x;        // ac_X(ac_Y(s)) ∈ Q
    bool v_y_even = false;
    bool v_x_even = false;
    bool positive = false;
    [[nodiscard]] bool holds() const { return v_y_even && v_x_even && positive; }
};

[[nodiscard]] inline bool is_even(const Rational& r) {
    return r.is_integer() && mpz_even_p(r.numerator().get_mpz_t()) != 0;
}

[[nodiscard]] inline SosLeadingData sos_leading_data(const std::vector<Series<SeriesField<RationalField>>>& summands) {
    if (summands.empty()) throw Error("sum of squares needs at least one summand");
    const auto& field = summands.front().field();
    auto s = field.zero();
    bool any = false;
    for (const auto& x : summands) {
        if (!x.is_exact()) throw Error("sum of squares needs exact summands");
        any = any || !x.is_zero();
        s += x * x;
    }
    if (!any) throw Error("all summands are zero");
    SosLeadingData d;
    d.v_y = finite_valuation(s);
    const auto acy = angular_component(s);
    d.ac_y = acy.to_string();
    d.v_x = finite_valuation(acy);
    d.ac_x = angular_component(acy);
    d.v_y_even = is_even(d.v_y);
    d.v_x_even = is_even(d.v_x);
    d.positive = d.ac_x.sign() > 0;
    return d;
}

/// α² + β² for α = 1/(1-X), β = 1/(1+X), cleared of the square factor
/// (1-X²)^{-2}: the polynomial (1+X)² + (1-X)² = 2 + 2X².
struct NonsquareWitness {
    Series<SeriesField<RationalField>> element;  // in Q((X))((Y))
    bool expansion_checked = false;               // (1+X)² + (1-X)² = 2 + 2X²
    bool is_square = true;
};

[[nodiscard]] inline NonsquareWitness nonsquare_witness(const LaurentQ2& f) {
    const auto& qx = f.coefficients();
    const auto x = qx.variable();
    const auto one = qx.one();
    const auto sum = (one + x) * (one + x) + (one - x) * (one - x);
    const auto target = qx.from_integer(2) + qx.from_integer(2) * x * x;
    NonsquareWitness w{f.constant(target), equal_to_precision(sum, target) && sum.is_exact(), true};
    w.is_square = is_square_in_tower(w.element);
    return w;
}

struct AnisotropyReport {
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> counterexamples;
    std::string extension;  // empty when sampling over F itself
    [[nodiscard]] bool passed() const { return failures == 0; }
};

namespace detail {

template <class F>
std::array<typename F::element_type, 6> sample_nonzero_tuple(const F& field, Stream& rng, const SeriesShape& shape) {
    while (true) {
        std::array<typename F::element_type, 6> a{field.zero(), field.zero(), field.zero(),
                                                  field.zero(), field.zero(), field.zero()};
        bool any = false;
        for (auto& x : a) {
            if (rng.coin(0.25)) continue;
            x = sample(field, rng, shape, true);
            any = true;
        }
        if (any) return a;
    }
}

template <class E>
std::string tuple_text(const std::array<E, 6>& a) {
    std::string s = "[";
    for (std::size_t i = 0; i < 6; ++i) s += (i ? "; " : "") + a[i].to_string();
    return s + "]";
}

}  // namespace detail

/// Evaluates φ on `trials` random nonzero exact 6-tuples over F and reports
/// every zero value as a counterexample.
template <class F>
[[nodiscard]] AnisotropyReport anisotropy_sample_test(const AlbertForm<F>& phi, const F& field, std::size_t trials,
                                                      Stream& rng, const SeriesShape& shape) {
    AnisotropyReport r;
    for (std::size_t i = 0; i < trials; ++i) {
        const auto a = detail::sample_nonzero_tuple(field, rng, shape);
        ++r.trials;
        if (phi.evaluate(a).is_zero()) {
            ++r.failures;
            r.counterexamples.push_back(detail::tuple_text(a));
        }
    }
    return r;
}

/// Same over K = F(γ): each a_i = b_i + γc_i with b, c sampled over F.
template <class F>
[[nodiscard]] AnisotropyReport anisotropy_sample_test(const AlbertForm<F>& phi, const QuadraticExtension<F>& ext,
                                                      std::size_t trials, Stream& rng, const SeriesShape& shape) {
    using K = typename QuadraticExtension<F>::Element;
    AnisotropyReport r;
    r.extension = ext.describe();
    const auto& field = ext.field();
    for (std::size_t i = 0; i < trials; ++i) {
        const auto b = detail::sample_nonzero_tuple(field, rng, shape);
        auto c = b;
        for (auto& x : c) x = rng.coin(0.3) ? field.zero() : sample(field, rng, shape, true);
        std::array<K, 6> a{ext.element(b[0], c[0]), ext.element(b[1], c[1]), ext.element(b[2], c[2]),
                           ext.element(b[3], c[3]), ext.element(b[4], c[4]), ext.element(b[5], c[5])};
        ++r.trials;
        const K value = phi.evaluate(a, [&](const typename F::element_type& x) { return ext.lift(x); });
        if (value.is_zero()) {
            ++r.failures;
            r.counterexamples.push_back(detail::tuple_text(a));
        }
    }
    return r;
}

/// D₁ = (X, -1), D₂ = (-X, Y) over Q((X))((Y)).
[[nodiscard]] inline std::pair<QuaternionAlgebra<LaurentQ2>, QuaternionAlgebra<LaurentQ2>> standard_biquaternion_factors(
    const LaurentQ2& f) {
    const auto x = f.constant(f.coefficients().variable());
    const auto y = f.variable();
    return {QuaternionAlgebra<LaurentQ2>(f, x, f.from_integer(-1)), QuaternionAlgebra<LaurentQ2>(f, -x, y)};
}

}  // namespace cda
