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
 * @file series.hpp
 * @brief Truncated generalized power series k((t^Γ)) with Γ = Z or Z[1/p].
 *
 * A `Series<C>` is a finitely supported map exponent -> nonzero coefficient
 * over the coefficient field `C`, together with a precision:
 *
 * - EXACT: the series is exactly the finite sum of its terms;
 * - O(t^π): only the coefficients at exponents < π are known.
 *
 * Towers are built by nesting: `SeriesField<SeriesField<RationalField>>` is
 * Q((X))((Y)). Arithmetic propagates precision conservatively:
 *
 *   add:  π = min(π₁, π₂)
 *   mul:  π = min(π₁ + v(s₂), π₂ + v(s₁))
 *
 * where the valuation of a truncated series with no known term is replaced by
 * its precision. Because a truncated series is only known up to its precision,
 * there is deliberately no `operator==`; use `equal_to_precision`.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <utility>

#include "cda/base_fields.hpp"
#include "cda/error.hpp"

namespace cda {

/// Value group of a series field: Z, or Z[1/p] (rationals with p-power denominators).
class ValueGroup {
public:
    [[nodiscard]] static ValueGroup integers() { return ValueGroup(0); }
    [[nodiscard]] static ValueGroup p_divisible(std::uint64_t p) {
        if (!is_prime(p)) throw Error("Z[1/p] needs a prime p, got " + std::to_string(p));
        return ValueGroup(p);
    }

    [[nodiscard]] bool is_integers() const noexcept { return p_ == 0; }
    /// The inverted prime, 0 for Z.
    [[nodiscard]] std::uint64_t prime() const noexcept { return p_; }

    [[nodiscard]] bool contains(const Rational& g) const {
        mpz_class den = g.denominator();
        if (den == 1) return true;
        if (p_ == 0) return false;
        while (mpz_divisible_ui_p(den.get_mpz_t(), p_) != 0) den /= static_cast<unsigned long>(p_);
        return den == 1;
    }

    [[nodiscard]] std::string describe() const { return p_ == 0 ? "Z" : "Z[1/" + std::to_string(p_) + "]"; }
    friend bool operator==(const ValueGroup&, const ValueGroup&) = default;

private:
    explicit ValueGroup(std::uint64_t p) : p_(p) {}
    std::uint64_t p_;
};

/// Precision of a series: nullopt means EXACT.
using Precision = std::optional<Rational>;

namespace detail {

inline Precision min_precision(const Precision& a, const Precision& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

}  // namespace detail

template <class C>
class Series;

/// Handle to a series field C((var^Γ)). Copies share the same descriptor.
template <class C>
class SeriesField {
public:
    using coefficient_field_type = C;
    using coefficient_type = typename C::element_type;
    using element_type = Series<C>;
    using Terms = std::map<Rational, coefficient_type>;

    SeriesField(C coefficients, std::string var, ValueGroup group = ValueGroup::integers(),
                Rational default_precision = 20)
        : d_(std::make_shared<const Data>(
              Data{std::move(coefficients), std::move(var), group, std::move(default_precision)})) {
        if (d_->var.empty()) throw Error("series variable needs a name");
    }

    [[nodiscard]] const C& coefficients() const noexcept { return d_->coefficients; }
    [[nodiscard]] const std::string& var() const noexcept { return d_->var; }
    [[nodiscard]] const ValueGroup& group() const noexcept { return d_->group; }
    /// Precision used when an operation has to invent one (inverse, roots).
    [[nodiscard]] const Rational& default_precision() const noexcept { return d_->default_precision; }
    [[nodiscard]] std::uint64_t characteristic() const { return d_->coefficients.characteristic(); }

    [[nodiscard]] Series<C> from_terms(Terms terms, Precision precision = std::nullopt) const {
        for (const auto& [e, c] : terms) {
            if (!d_->group.contains(e)) {
                throw Error("exponent " + e.to_string() + " is not in " + d_->group.describe());
            }
        }
        if (precision && !d_->group.contains(*precision)) {
            throw Error("precision " + precision->to_string() + " is not in " + d_->group.describe());
        }
        return Series<C>(*this, std::move(terms), std::move(precision));
    }
    [[nodiscard]] Series<C> zero() const { return from_terms({}); }
    /// O(var^precision) with no known term.
    [[nodiscard]] Series<C> zero_to(const Rational& precision) const { return from_terms({}, precision); }
    [[nodiscard]] Series<C> constant(const coefficient_type& c) const { return monomial(c, 0); }
    [[nodiscard]] Series<C> monomial(const coefficient_type& c, const Rational& e) const {
        Terms t;
        t.emplace(e, c);
        return from_terms(std::move(t));
    }
    [[nodiscard]] Series<C> variable() const { return monomial(coefficients().one(), 1); }
    [[nodiscard]] Series<C> one() const { return constant(coefficients().one()); }
    [[nodiscard]] Series<C> from_integer(const mpz_class& n) const { return constant(coefficients().from_integer(n)); }
    [[nodiscard]] Series<C> from_rational(const Rational& r) const { return constant(coefficients().from_rational(r)); }

    /// "F_7((t))", "F_7((x^Z[1/7]))((t^Z[1/7]))", "Q((X))((Y))".
    [[nodiscard]] std::string describe() const {
        std::string out = coefficients().describe() + "((" + var();
        if (!group().is_integers()) out += "^" + group().describe();
        return out + "))";
    }

    /// Structural equality; the default precision is configuration, not identity.
    friend bool operator==(const SeriesField& a, const SeriesField& b) {
        return a.d_ == b.d_ || (a.d_->var == b.d_->var && a.d_->group == b.d_->group &&
                                a.d_->coefficients == b.d_->coefficients);
    }

private:
    struct Data {
        C coefficients;
        std::string var;
        ValueGroup group;
        Rational default_precision;
    };
    std::shared_ptr<const Data> d_;
};

template <class T>
struct is_series_field : std::false_type {};
template <class C>
struct is_series_field<SeriesField<C>> : std::true_type {};
template <class T>
inline constexpr bool is_series_field_v = is_series_field<T>::value;

template <class T>
struct is_series : std::false_type {};
template <class C>
struct is_series<Series<C>> : std::true_type {};
template <class T>
inline constexpr bool is_series_v = is_series<T>::value;

/// An element of C((t^Γ)), exact or truncated.
template <class C>
class Series {
public:
    using field_type = SeriesField<C>;
    using coefficient_type = typename C::element_type;
    using Terms = std::map<Rational, coefficient_type>;

    [[nodiscard]] const field_type& field() const noexcept { return field_; }
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }
    [[nodiscard]] const Precision& precision() const noexcept { return prec_; }
    [[nodiscard]] bool is_exact() const noexcept { return !prec_.has_value(); }
    /// No known nonzero coefficient (zero "to precision" when truncated).
    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_exact_zero() const noexcept { return terms_.empty() && !prec_; }
    /// A single exact term.
    [[nodiscard]] bool is_monomial() const noexcept { return !prec_ && terms_.size() == 1; }

    /// Coefficient at exponent e; throws when e is beyond the known precision.
    [[nodiscard]] coefficient_type coefficient(const Rational& e) const {
        if (prec_ && e >= *prec_) {
            throw PrecisionError("coefficient at " + e.to_string() + " is beyond precision " + prec_->to_string());
        }
        const auto it = terms_.find(e);
        return it == terms_.end() ? field_.coefficients().zero() : it->second;
    }

    /// Least exponent that can carry a nonzero coefficient: the valuation when
    /// known, the precision when no term is known, nullopt for the exact zero.
    [[nodiscard]] Precision order_bound() const {
        if (!terms_.empty()) return terms_.begin()->first;
        return prec_;
    }

    [[nodiscard]] Series truncated(const Rational& precision) const {
        Series out(field_, {}, detail::min_precision(prec_, precision), Unchecked{});
        for (const auto& [e, c] : terms_) {
            if (e >= *out.prec_) break;
            out.terms_.emplace_hint(out.terms_.end(), e, c);
        }
        return out;
    }

    /// Multiplication by var^shift.
    [[nodiscard]] Series shifted(const Rational& shift) const {
        Series out(field_, {}, prec_ ? Precision(*prec_ + shift) : std::nullopt, Unchecked{});
        for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e + shift, c);
        return out;
    }

    [[nodiscard]] Series scaled(const coefficient_type& c) const {
        if (c.is_zero()) return field_.zero();
        Series out(field_, {}, prec_, Unchecked{});
        for (const auto& [e, a] : terms_) {
            auto prod = a * c;
            if (!prod.is_zero()) out.terms_.emplace_hint(out.terms_.end(), e, std::move(prod));
        }
        return out;
    }

    Series& operator+=(const Series& o) { return *this = add(*this, o, false); }
    Series& operator-=(const Series& o) { return *this = add(*this, o, true); }
    Series& operator*=(const Series& o) { return *this = *this * o; }

    friend Series operator+(const Series& a, const Series& b) { return add(a, b, false); }
    friend Series operator-(const Series& a, const Series& b) { return add(a, b, true); }
    friend Series operator-(const Series& a) {
        Series out(a.field_, {}, a.prec_, Unchecked{});
        for (const auto& [e, c] : a.terms_) out.terms_.emplace_hint(out.terms_.end(), e, -c);
        return out;
    }

    friend Series operator*(const Series& a, const Series& b) {
        a.check_same(b);
        if (a.is_exact_zero() || b.is_exact_zero()) return a.field_.zero();
        if (b.is_monomial()) return a.shifted(b.terms_.begin()->first).scaled(b.terms_.begin()->second);
        if (a.is_monomial()) return b.shifted(a.terms_.begin()->first).scaled(a.terms_.begin()->second);
        Precision prec;
        if (a.prec_) prec = detail::min_precision(prec, *a.prec_ + *b.order_bound());
        if (b.prec_) prec = detail::min_precision(prec, *b.prec_ + *a.order_bound());
        Series out(a.field_, {}, prec, Unchecked{});
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                Rational e = ea + eb;
                if (prec && e >= *prec) break;
                auto prod = ca * cb;
                auto it = out.terms_.find(e);
                if (it == out.terms_.end()) {
                    out.terms_.emplace(std::move(e), std::move(prod));
                } else {
                    it->second += prod;
                }
            }
        }
        out.drop_zeros();
        return out;
    }

    /// Inverse with a precision chosen from the field's default: relative
    /// precision min(default, known relative precision of the input).
    [[nodiscard]] Series inverse() const;

    [[nodiscard]] Series pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        Series result = field_.one();
        Series base = *this;
        while (n > 0) {
            if (n & 1L) result *= base;
            n >>= 1;
            if (n > 0) base = base * base;
        }
        return result;
    }

    /// Textual form, e.g. "3*t^(-1) + 2 + 5*t^(3/7) + O(t^5)".
    [[nodiscard]] std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Series& s) { return os << s.to_string(); }

private:
    friend class SeriesField<C>;
    struct Unchecked {};

    Series(field_type f, Terms terms, Precision prec) : field_(std::move(f)), terms_(std::move(terms)), prec_(std::move(prec)) {
        if (prec_) terms_.erase(terms_.lower_bound(*prec_), terms_.end());
        drop_zeros();
    }
    Series(field_type f, Terms terms, Precision prec, Unchecked)
        : field_(std::move(f)), terms_(std::move(terms)), prec_(std::move(prec)) {}

    void drop_zeros() {
        std::erase_if(terms_, [](const auto& kv) { return kv.second.is_zero(); });
    }

    void check_same(const Series& o) const {
        if (!(field_ == o.field_)) {
            throw DomainMismatch("series fields differ: " + field_.describe() + " vs " + o.field_.describe());
        }
    }

    static Series add(const Series& a, const Series& b, bool subtract) {
        a.check_same(b);
        Series out(a.field_, {}, detail::min_precision(a.prec_, b.prec_), Unchecked{});
        auto below = [&](const Rational& e) { return !out.prec_ || e < *out.prec_; };
        for (const auto& [e, c] : a.terms_) {
            if (!below(e)) break;
            out.terms_.emplace_hint(out.terms_.end(), e, c);
        }
        for (const auto& [e, c] : b.terms_) {
            if (!below(e)) break;
            auto it = out.terms_.find(e);
            if (it == out.terms_.end()) {
                out.terms_.emplace(e, subtract ? -c : c);
            } else if (subtract) {
                it->second -= c;
            } else {
                it->second += c;
            }
        }
        out.drop_zeros();
        return out;
    }

    field_type field_;
    Terms terms_;
    Precision prec_;
};

// ---------------------------------------------------------------------------
// Valuation, residue, angular component
// ---------------------------------------------------------------------------

/// Valuation; nullopt is +infinity (only for the exact zero).
template <class C>
[[nodiscard]] std::optional<Rational> valuation(const Series<C>& s) {
    if (!s.terms().empty()) return s.terms().begin()->first;
    if (s.is_exact()) return std::nullopt;
    throw PrecisionError("valuation below precision unknown: " + s.to_string());
}

/// Known finite valuation, rejecting zero.
template <class C>
[[nodiscard]] Rational finite_valuation(const Series<C>& s) {
    auto v = valuation(s);
    if (!v) throw Error("valuation of zero is infinite");
    return *v;
}

/// Residue map extended by zero outside the valuation ring.
template <class C>
[[nodiscard]] typename C::element_type residue(const Series<C>& s) {
    if (!s.terms().empty() && s.terms().begin()->first < 0) return s.field().coefficients().zero();
    if (s.precision() && *s.precision() <= 0) {
        throw PrecisionError("insufficient precision for residue: " + s.to_string());
    }
    return s.coefficient(0);
}

/// Coefficient of the least exponent.
template <class C>
[[nodiscard]] typename C::element_type angular_component(const Series<C>& s) {
    if (s.is_exact_zero()) throw Error("angular component of zero");
    if (s.terms().empty()) throw PrecisionError("angular component below precision unknown: " + s.to_string());
    return s.terms().begin()->second;
}

template <class C>
[[nodiscard]] bool equal_to_precision(const Series<C>& a, const Series<C>& b) {
    return (a - b).is_zero();
}

template <class C>
[[nodiscard]] bool is_one(const Series<C>& s) {
    return s.is_monomial() && s.terms().begin()->first == 0 && is_one(s.terms().begin()->second);
}

// ---------------------------------------------------------------------------
// Inversion
// ---------------------------------------------------------------------------

/// s^{-1} known up to O(var^target): leading term division followed by the
/// geometric series of the normalized tail. Exact monomials invert exactly.
template <class C>
[[nodiscard]] Series<C> invert(const Series<C>& s, const Rational& target) {
    if (s.is_exact_zero()) throw Error("inverse of zero");
    if (s.terms().empty()) throw PrecisionError("inverse of a series with unknown valuation");
    const auto& field = s.field();
    const Rational v = s.terms().begin()->first;
    if (s.precision() && *s.precision() - v - v < target) {
        throw PrecisionError("input precision " + s.precision()->to_string() + " cannot reach O(" + field.var() +
                             "^" + target.to_string() + ") for the inverse");
    }
    const auto lead_inv = s.terms().begin()->second.inverse();
    const Series<C> w = s.shifted(-v).scaled(lead_inv) - field.one();
    if (w.is_exact_zero()) return field.monomial(lead_inv, -v);

    const Rational relative = target + v;
    Series<C> acc = field.one().truncated(relative);
    Series<C> term = field.one();
    while (true) {
        term = (-(term * w)).truncated(relative);
        if (term.is_zero()) break;
        acc += term;
    }
    acc += term;  // carries the precision of the last step
    return acc.scaled(lead_inv).shifted(-v);
}

template <class C>
Series<C> Series<C>::inverse() const {
    if (is_exact_zero()) throw Error("inverse of zero");
    if (terms_.empty()) throw PrecisionError("inverse of a series with unknown valuation");
    const Rational v = terms_.begin()->first;
    Rational relative = field_.default_precision() + (v < 0 ? -v : Rational(0));
    if (prec_) relative = std::min(relative, *prec_ - v);
    return invert(*this, relative - v);
}

// ---------------------------------------------------------------------------
// q-th roots
// ---------------------------------------------------------------------------

template <class C>
[[nodiscard]] std::optional<Series<C>> qth_root(const Series<C>& s, std::uint64_t q);

/// Newton lifting of the q-th root of a valuation-0 element whose residue is a
/// q-th power. The residue root is the smallest one for prime residue fields.
template <class C>
[[nodiscard]] Series<C> hensel_qth_root(const Series<C>& s, std::uint64_t q, const Rational& target) {
    const auto& field = s.field();
    if (!is_prime(q)) throw Error("q = " + std::to_string(q) + " is not prime");
    if (field.characteristic() == q) throw Error("q equals the characteristic; Hensel lifting does not apply");
    if (finite_valuation(s) != 0) throw Error("Hensel lifting needs an element of valuation 0");
    const auto root = qth_root(residue(s), q);
    if (!root) throw Error("residue is not a " + std::to_string(q) + "-th power");

    Series<C> y = field.constant(*root);
    const long ql = static_cast<long>(q);
    if ((y.pow(ql) - s).is_exact_zero()) return y;

    const Rational goal = s.precision() ? std::min(target, *s.precision()) : target;
    const Series<C> q_elt = field.from_integer(mpz_class(static_cast<unsigned long>(q)));
    for (int iter = 0; iter < 256; ++iter) {
        const Series<C> err = (y.pow(ql) - s).truncated(goal);
        if (err.is_zero()) return y.truncated(goal);
        const Series<C> deriv = q_elt * y.pow(ql - 1);
        y = (y - err * invert(deriv, goal)).truncated(goal);
    }
    throw InternalError("Newton iteration for a q-th root did not converge");
}

/// Some q-th root of s in the tower, when one exists: valuation in qΓ,
/// angular component recursively a q-th power, then Hensel.
template <class C>
[[nodiscard]] std::optional<Series<C>> qth_root(const Series<C>& s, std::uint64_t q) {
    if (s.is_exact_zero()) return s;
    const auto& field = s.field();
    const Rational v = finite_valuation(s);
    const Rational m = v / Rational(static_cast<long>(q));
    if (!field.group().contains(m)) return std::nullopt;
    if (!qth_root(angular_component(s), q)) return std::nullopt;
    const Rational relative = s.precision() ? *s.precision() - v : field.default_precision();
    return hensel_qth_root(s.shifted(-v), q, relative).shifted(m);
}

namespace detail {

inline bool has_qth_root(const Rational& x, std::uint64_t q) { return qth_root(x, q).has_value(); }
inline bool has_qth_root(const PrimeFieldElement& x, std::uint64_t q) {
    return x.is_zero() || is_qth_power(x.modulus(), q, x);
}
template <class C>
bool has_qth_root(const Series<C>& s, std::uint64_t q) {
    if (s.is_exact_zero()) return true;
    if (s.field().characteristic() == q) throw Error("q-th power test in characteristic q is not supported");
    const Rational v = finite_valuation(s);
    if (!s.field().group().contains(v / Rational(static_cast<long>(q)))) return false;
    return has_qth_root(angular_component(s), q);
}

}  // namespace detail

/// Whether qΓ, qΓ+γ, ..., qΓ+(q-1)γ are pairwise distinct cosets, i.e. γ ∉ qΓ.
[[nodiscard]] inline bool is_coset_separating(const Rational& gamma, std::uint64_t q, const ValueGroup& group) {
    if (!group.contains(gamma)) throw Error(gamma.to_string() + " is not in " + group.describe());
    if (!is_prime(q)) throw Error("q = " + std::to_string(q) + " is not prime");
    return !group.contains(gamma / Rational(static_cast<long>(q)));
}

/// Decides squareness of an exact nonzero element of a characteristic-0 (or
/// odd characteristic) tower: even valuation and square angular component,
/// recursively down to the base field.
template <class C>
[[nodiscard]] bool is_square_in_tower(const Series<C>& s) {
    if (!s.is_exact()) throw Error("squareness is not decidable on a truncated series");
    if (s.is_zero()) throw Error("is_square_in_tower needs a nonzero element");
    return detail::has_qth_root(s, 2);
}

/// Whether an exact nonzero element is a q-th power in its tower.
template <class C>
[[nodiscard]] bool is_qth_power_in_tower(const Series<C>& s, std::uint64_t q) {
    if (s.is_zero()) throw Error("q-th power test needs a nonzero element");
    return detail::has_qth_root(s, q);
}

// ---------------------------------------------------------------------------
// Text
// ---------------------------------------------------------------------------

namespace detail {

struct CoefficientText {
    bool negative;
    std::string magnitude;
    bool unit;  // magnitude is exactly one
};

inline CoefficientText coefficient_text(const Rational& c) {
    const Rational a = c.abs();
    return {c.sign() < 0, a.to_string(), a.is_one()};
}
inline CoefficientText coefficient_text(const PrimeFieldElement& c) { return {false, c.to_string(), c.is_one()}; }
template <class C>
CoefficientText coefficient_text(const Series<C>& c) {
    return {false, "(" + c.to_string() + ")", is_one(c)};
}

inline std::string power_text(const std::string& var, const Rational& e) {
    if (e.is_integer() && e.sign() >= 0) return e.is_one() ? var : var + "^" + e.to_string();
    return var + "^(" + e.to_string() + ")";
}

}  // namespace detail

template <class C>
std::string Series<C>::to_string() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        const auto ct = detail::coefficient_text(c);
        if (first) {
            if (ct.negative) os << '-';
        } else {
            os << (ct.negative ? " - " : " + ");
        }
        first = false;
        if (e.is_zero()) {
            os << ct.magnitude;
        } else if (ct.unit) {
            os << detail::power_text(field_.var(), e);
        } else {
            os << ct.magnitude << '*' << detail::power_text(field_.var(), e);
        }
    }
    if (prec_) {
        if (!first) os << " + ";
        os << "O(" << detail::power_text(field_.var(), *prec_) << ')';
    } else if (first) {
        os << '0';
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Common fields
// ---------------------------------------------------------------------------

using LaurentFp = SeriesField<PrimeField>;
using LaurentQ = SeriesField<RationalField>;
using LaurentQ2 = SeriesField<SeriesField<RationalField>>;
using HahnTowerFp = SeriesField<SeriesField<PrimeField>>;

/// F_p((t)).
[[nodiscard]] inline LaurentFp laurent_fp(std::uint64_t p, const std::string& var = "t", long precision = 20) {
    return {PrimeField(p), var, ValueGroup::integers(), precision};
}

/// Q((X)), variable named X.
[[nodiscard]] inline LaurentQ laurent_q(const std::string& var = "X", long precision = 20) {
    return {RationalField{}, var, ValueGroup::integers(), precision};
}

/// Q((X))((Y)) ordered with 0 < Y < X.
[[nodiscard]] inline LaurentQ2 laurent_q2(long precision = 20) {
    return {laurent_q("X", precision), "Y", ValueGroup::integers(), precision};
}

/// F_p((x^Γ))((t^Γ)) with Γ = Z[1/ell].
[[nodiscard]] inline HahnTowerFp hahn_tower_fp(std::uint64_t p, std::uint64_t ell, long precision = 20) {
    const auto group = ValueGroup::p_divisible(ell);
    return {SeriesField<PrimeField>(PrimeField(p), "x", group, precision), "t", group, precision};
}

}  // namespace cda
