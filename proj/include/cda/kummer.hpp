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
 * @file kummer.hpp
 * @brief Kummer extensions K = F(u), u^q = t, their Galois action and norm.
 *
 * Elements of K are coordinate vectors (b₀, ..., b_{q-1}) for
 * b₀ + b₁u + ... + b_{q-1}u^{q-1}. The generator σ₀ acts by u ↦ ξu.
 *
 * Two independent routes to N_{K/F}:
 *  - `norm_oracle`: the product of the q conjugates, computed in K;
 *  - `norm_formula`: Σ_{c ∈ C₀} f(c) b̄_c t^{Σc/q} from the anagram classes.
 *
 * For series base fields with v(t) ∉ qΓ, `is_norm` decides membership in
 * N(K^x) from the residue of a normalized unit and returns either a preimage
 * or a certificate of failure.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "cda/anagram.hpp"
#include "cda/base_fields.hpp"
#include "cda/error.hpp"
#include "cda/series.hpp"

namespace cda {

template <class F>
class KummerElement;

/// K = F(u), u^q = t, with a fixed primitive q-th root of unity ξ ∈ F.
template <class F>
class KummerContext {
public:
    using field_type = F;
    using element_type = typename F::element_type;

    struct WeightedClass {
        anagram::Tuple rep;
        unsigned t_power;  // Σc / q
        long long weight_level_difference;
        long long weight_class_size;
    };

    KummerContext(F field, unsigned q, element_type t, element_type xi) {
        if (!is_prime(q)) throw Error("extension degree " + std::to_string(q) + " is not prime");
        anagram::require_supported(q);
        if (field.characteristic() == q) throw Error("q equals the characteristic of F");
        if (t.is_zero()) throw Error("t must be nonzero");
        const auto one = field.one();
        if (!equal_to_precision(xi.pow(static_cast<long>(q)), one)) throw Error("xi^q != 1");
        for (unsigned k = 1; k < q; ++k) {
            if (equal_to_precision(xi.pow(static_cast<long>(k)), one)) throw Error("xi is not a primitive q-th root of unity");
        }
        if constexpr (is_series_field_v<F>) {
            if (!is_coset_separating(finite_valuation(t), q, field.group())) {
                throw Error("v(t) = " + finite_valuation(t).to_string() + " lies in " + std::to_string(q) +
                            field.group().describe() + "; the cosets are not distinct");
            }
        } else {
            if (qth_root(t, q)) throw Error("t is a q-th power in F; F(u) is not a field");
        }
        auto d = std::make_shared<Data>(Data{std::move(field), q, std::move(t), std::move(xi), {}, {}});
        for (unsigned k = 0; k < q; ++k) d->xi_powers.push_back(d->xi.pow(static_cast<long>(k)));
        for (const auto& c : anagram::c0_classes(q)) {
            d->c0.push_back({c.rep, anagram::coordinate_sum(c.rep) / q, c.coefficient(anagram::Convention::LevelDifference),
                             c.coefficient(anagram::Convention::ClassSizeTimesLevelDifference)});
        }
        d_ = std::move(d);
    }

    [[nodiscard]] const F& field() const noexcept { return d_->field; }
    [[nodiscard]] unsigned q() const noexcept { return d_->q; }
    [[nodiscard]] const element_type& t() const noexcept { return d_->t; }
    [[nodiscard]] const element_type& xi() const noexcept { return d_->xi; }
    /// ξ^k for any integer k.
    [[nodiscard]] const element_type& xi_power(long k) const {
        const long q = static_cast<long>(d_->q);
        return d_->xi_powers[static_cast<std::size_t>(((k % q) + q) % q)];
    }
    [[nodiscard]] const std::vector<WeightedClass>& c0() const noexcept { return d_->c0; }

    [[nodiscard]] KummerElement<F> element(std::vector<element_type> coords) const;
    [[nodiscard]] KummerElement<F> embed(const element_type& b) const;
    [[nodiscard]] KummerElement<F> zero() const { return embed(field().zero()); }
    [[nodiscard]] KummerElement<F> one() const { return embed(field().one()); }
    /// u^i as an element of K.
    [[nodiscard]] KummerElement<F> u_power(unsigned i) const;

    [[nodiscard]] std::string describe() const {
        return field().describe() + "(u), u^" + std::to_string(q()) + " = " + t().to_string() + ", xi = " + xi().to_string();
    }

    friend bool operator==(const KummerContext& a, const KummerContext& b) {
        return a.d_ == b.d_ || (a.d_->field == b.d_->field && a.d_->q == b.d_->q &&
                                equal_to_precision(a.d_->t, b.d_->t) && equal_to_precision(a.d_->xi, b.d_->xi));
    }

private:
    struct Data {
        F field;
        unsigned q;
        element_type t;
        element_type xi;
        std::vector<element_type> xi_powers;
        std::vector<WeightedClass> c0;
    };
    std::shared_ptr<const Data> d_;
};

/// b₀ + b₁u + ... + b_{q-1}u^{q-1}.
template <class F>
class KummerElement {
public:
    using element_type = typename F::element_type;

    KummerElement(KummerContext<F> ctx, std::vector<element_type> coords) : ctx_(std::move(ctx)), coords_(std::move(coords)) {
        if (coords_.size() != ctx_.q()) {
            throw Error("expected " + std::to_string(ctx_.q()) + " coordinates, got " + std::to_string(coords_.size()));
        }
    }

    [[nodiscard]] const KummerContext<F>& context() const noexcept { return ctx_; }
    [[nodiscard]] const std::vector<element_type>& coords() const noexcept { return coords_; }
    [[nodiscard]] const element_type& operator[](std::size_t i) const { return coords_[i]; }
    [[nodiscard]] bool is_zero() const {
        return std::all_of(coords_.begin(), coords_.end(), [](const auto& b) { return b.is_zero(); });
    }

    friend KummerElement operator+(const KummerElement& a, const KummerElement& b) {
        a.check_same(b);
        auto c = a.coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
        return {a.ctx_, std::move(c)};
    }
    friend KummerElement operator-(const KummerElement& a, const KummerElement& b) {
        a.check_same(b);
        auto c = a.coords_;
        for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b.coords_[i];
        return {a.ctx_, std::move(c)};
    }
    /// Product with u^{i+j} reduced through u^q = t.
    friend KummerElement operator*(const KummerElement& a, const KummerElement& b) {
        a.check_same(b);
        const unsigned q = a.ctx_.q();
        const auto& f = a.ctx_.field();
        std::vector<element_type> low(q, f.zero()), high(q, f.zero());
        for (unsigned i = 0; i < q; ++i) {
            if (a.coords_[i].is_zero()) continue;
            for (unsigned j = 0; j < q; ++j) {
                if (b.coords_[j].is_zero()) continue;
                auto prod = a.coords_[i] * b.coords_[j];
                if (i + j < q) {
                    low[i + j] += prod;
                } else {
                    high[i + j - q] += prod;
                }
            }
        }
        for (unsigned k = 0; k < q; ++k) {
            if (!high[k].is_zero()) low[k] += high[k] * a.ctx_.t();
        }
        return {a.ctx_, std::move(low)};
    }

    [[nodiscard]] std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < coords_.size(); ++i) s += (i ? "; " : "") + coords_[i].to_string();
        return s + "]";
    }

private:
    void check_same(const KummerElement& o) const {
        if (!(ctx_ == o.ctx_)) throw DomainMismatch("Kummer elements from different extensions");
    }

    KummerContext<F> ctx_;
    std::vector<element_type> coords_;
};

template <class F>
KummerElement<F> KummerContext<F>::element(std::vector<element_type> coords) const {
    return {*this, std::move(coords)};
}

template <class F>
KummerElement<F> KummerContext<F>::embed(const element_type& b) const {
    std::vector<element_type> c(q(), field().zero());
    c[0] = b;
    return {*this, std::move(c)};
}

template <class F>
KummerElement<F> KummerContext<F>::u_power(unsigned i) const {
    if (i >= q()) throw Error("u^i is only a basis vector for i < q");
    std::vector<element_type> c(q(), field().zero());
    c[i] = field().one();
    return {*this, std::move(c)};
}

template <class F>
[[nodiscard]] KummerElement<F> kummer_mul(const KummerElement<F>& a, const KummerElement<F>& b) {
    return a * b;
}

/// σ₀^k(a) = Σ ξ^{ik} b_i u^i.
template <class F>
[[nodiscard]] KummerElement<F> galois_sigma(const KummerElement<F>& a, unsigned k) {
    const auto& ctx = a.context();
    if (k >= ctx.q()) throw Error("Galois exponent " + std::to_string(k) + " is out of range [0, q)");
    auto c = a.coords();
    for (unsigned i = 0; i < ctx.q(); ++i) {
        if (!c[i].is_zero()) c[i] = ctx.xi_power(static_cast<long>(i) * k) * c[i];
    }
    return ctx.element(std::move(c));
}

/// ∏_{k<q} σ₀^k(a) evaluated in K. The u-coordinates of the product must
/// vanish; a nonzero known coefficient there is an arithmetic bug.
template <class F>
[[nodiscard]] typename F::element_type norm_oracle(const KummerElement<F>& a) {
    const unsigned q = a.context().q();
    KummerElement<F> prod = a;
    for (unsigned k = 1; k < q; ++k) prod = prod * galois_sigma(a, k);
    for (unsigned i = 1; i < q; ++i) {
        if (!prod[i].is_zero()) {
            throw InternalError("norm has a nonzero u^" + std::to_string(i) + " coordinate: " + prod[i].to_string());
        }
    }
    return prod[0];
}

/// Σ_{c ∈ C₀} f(c) · b_{c_0}···b_{c_{q-1}} · t^{Σc/q}.
template <class F>
[[nodiscard]] typename F::element_type norm_formula(const KummerElement<F>& a,
                                                    anagram::Convention conv = anagram::Convention::LevelDifference) {
    using E = typename F::element_type;
    const auto& ctx = a.context();
    const auto& field = ctx.field();
    const unsigned q = ctx.q();
    // powers[i][k] = b_i^k, t_powers[k] = t^k
    std::vector<std::vector<E>> powers(q);
    for (unsigned i = 0; i < q; ++i) {
        powers[i].push_back(field.one());
        for (unsigned k = 1; k <= q; ++k) powers[i].push_back(powers[i].back() * a[i]);
    }
    std::vector<E> t_powers{field.one()};
    for (unsigned k = 1; k < q; ++k) t_powers.push_back(t_powers.back() * ctx.t());

    E sum = field.zero();
    for (const auto& wc : ctx.c0()) {
        const long long w = conv == anagram::Convention::LevelDifference ? wc.weight_level_difference : wc.weight_class_size;
        const E weight = field.from_integer(mpz_class(static_cast<long>(w)));
        if (weight.is_zero()) continue;
        E term = weight * t_powers[wc.t_power];
        for (std::size_t i = 0; i < wc.rep.size() && !term.is_zero();) {
            std::size_t j = i;
            while (j < wc.rep.size() && wc.rep[j] == wc.rep[i]) ++j;
            term *= powers[wc.rep[i]][j - i];
            i = j;
        }
        sum += term;
    }
    return sum;
}

/// min_i { i·v(t) + q·v(b_i) } over the nonzero coordinates.
template <class F>
    requires is_series_field_v<F>
[[nodiscard]] Rational norm_valuation(const KummerElement<F>& a) {
    const auto& ctx = a.context();
    const Rational vt = finite_valuation(ctx.t());
    std::optional<Rational> best;
    for (unsigned i = 0; i < ctx.q(); ++i) {
        const auto& b = a[i];
        if (b.is_exact_zero()) continue;
        const Rational cand = Rational(static_cast<long>(i)) * vt + Rational(static_cast<long>(ctx.q())) * finite_valuation(b);
        if (!best || cand < *best) best = cand;
    }
    if (!best) throw Error("norm valuation of zero");
    return *best;
}

/// Residues of norms over F_p((t)) against the subgroup F_p^{xq}.
struct ResidueOfNormsReport {
    std::uint64_t p = 0;
    unsigned q = 0;
    std::vector<std::uint64_t> qth_powers;        // F_p^{xq}
    std::vector<std::uint64_t> observed;          // distinct nonzero residues of sampled norms
    std::size_t samples = 0;
    std::size_t zero_residues = 0;                // norms of positive valuation
    std::vector<std::uint64_t> outside;           // observed residues not in F_p^{xq}
    std::vector<std::pair<std::uint64_t, std::string>> preimages;  // y -> a with res N(a) = y
    bool surjective = false;
    [[nodiscard]] bool contained() const { return outside.empty(); }
};

template <class F>
    requires std::is_same_v<typename F::coefficient_field_type, PrimeField>
[[nodiscard]] ResidueOfNormsReport residue_of_norms(const KummerContext<F>& ctx,
                                                    std::span<const KummerElement<F>> samples) {
    const std::uint64_t p = ctx.field().coefficients().modulus();
    ResidueOfNormsReport rep;
    rep.p = p;
    rep.q = ctx.q();
    for (const auto& y : qth_power_set(p, ctx.q())) rep.qth_powers.push_back(y.value());
    const std::set<std::uint64_t> allowed(rep.qth_powers.begin(), rep.qth_powers.end());
    std::set<std::uint64_t> seen;
    for (const auto& a : samples) {
        const auto r = residue(norm_oracle(a));
        ++rep.samples;
        if (r.is_zero()) {
            ++rep.zero_residues;
            continue;
        }
        seen.insert(r.value());
        if (!allowed.contains(r.value())) rep.outside.push_back(r.value());
    }
    rep.observed.assign(seen.begin(), seen.end());

    std::set<std::uint64_t> hit;
    for (const auto y : rep.qth_powers) {
        const auto rho = qth_root(PrimeField(p).element(y), ctx.q());
        const auto a = ctx.embed(ctx.field().constant(*rho));
        const auto r = residue(norm_oracle(a));
        if (r.value() == y) {
            hit.insert(y);
            rep.preimages.emplace_back(y, a.to_string());
        }
    }
    rep.surjective = hit.size() == rep.qth_powers.size();
    return rep;
}

/// Outcome of a norm-membership decision.
template <class F>
struct NormDecision {
    enum class Reason {
        Preimage,                // is a norm; `preimage` holds a with N(a) = x
        ResidueNotQthPower,      // `residue` is outside the q-th powers of the residue field
        ValuationOutsideCosets,  // v(x) is in no coset qΓ + i·v(t)
    };
    using element_type = typename F::element_type;
    using residue_type = typename F::coefficient_type;

    bool is_norm = false;
    Reason reason = Reason::Preimage;
    Rational valuation;
    unsigned coset_index = 0;  // i with v(x) ∈ qΓ + i·v(t)
    std::optional<residue_type> residue;
    std::optional<KummerElement<F>> preimage;
};

/// Decides x ∈ N(K^x) for a series base field.
///
/// Write v(x) = i·v(t) + q·m. Then x is a norm iff the unit
/// y = x / (N(u)^i · T^{qm}) has a q-th power residue (T the uniformizing
/// variable). In that case y = z^q by Hensel and x = N(z·T^m·u^i).
template <class F>
    requires is_series_field_v<F>
[[nodiscard]] NormDecision<F> is_norm(const KummerContext<F>& ctx, const typename F::element_type& x) {
    NormDecision<F> out;
    const auto& field = ctx.field();
    const unsigned q = ctx.q();
    const Rational qr(static_cast<long>(q));
    out.valuation = finite_valuation(x);
    const Rational vt = finite_valuation(ctx.t());

    std::optional<unsigned> index;
    for (unsigned i = 0; i < q; ++i) {
        if (field.group().contains((out.valuation - Rational(static_cast<long>(i)) * vt) / qr)) {
            index = i;
            break;
        }
    }
    if (!index) {
        out.reason = NormDecision<F>::Reason::ValuationOutsideCosets;
        return out;
    }
    out.coset_index = *index;
    const Rational m = (out.valuation - Rational(static_cast<long>(*index)) * vt) / qr;
    const auto t_m = field.monomial(field.coefficients().one(), m);
    const auto scale = norm_oracle(ctx.u_power(1)).pow(static_cast<long>(*index)) * t_m.pow(static_cast<long>(q));
    const auto y = x * scale.inverse();
    out.residue = residue(y);
    if (!qth_root(*out.residue, q)) {
        out.reason = NormDecision<F>::Reason::ResidueNotQthPower;
        return out;
    }
    const Rational goal = y.precision() ? *y.precision() : field.default_precision();
    const auto z = hensel_qth_root(y, q, goal);
    std::vector<typename F::element_type> coords(q, field.zero());
    coords[*index] = z * t_m;
    out.is_norm = true;
    out.reason = NormDecision<F>::Reason::Preimage;
    out.preimage = ctx.element(std::move(coords));
    return out;
}

// ---------------------------------------------------------------------------
// Standard contexts
// ---------------------------------------------------------------------------

/// F_p((t)) with u^q = t and ξ the smallest primitive q-th root of unity.
[[nodiscard]] inline KummerContext<LaurentFp> laurent_kummer(std::uint64_t p, unsigned q, long precision = 20) {
    const auto f = laurent_fp(p, "t", precision);
    return {f, q, f.variable(), f.constant(primitive_qth_root(p, q))};
}

/// F_p((x^Γ))((t^Γ)) with Γ = Z[1/ell], u^q = t.
[[nodiscard]] inline KummerContext<HahnTowerFp> hahn_kummer(std::uint64_t p, unsigned q, std::uint64_t ell,
                                                            long precision = 20) {
    const auto f = hahn_tower_fp(p, ell, precision);
    const auto xi = primitive_qth_root(p, q);
    return {f, q, f.variable(), f.from_integer(mpz_class(static_cast<unsigned long>(xi.value())))};
}

/// Q(√t) with ξ = -1.
[[nodiscard]] inline KummerContext<RationalField> rational_quadratic(const Rational& t) {
    return {RationalField{}, 2, t, Rational(-1)};
}

}  // namespace cda
