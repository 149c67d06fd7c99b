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
 * @file base_fields.hpp
 * @brief Exact prime fields F_p and the rationals, plus the small amount of
 *        elementary number theory (q-th roots of unity, q-th powers, primes
 *        p = 1 mod q) the rest of the library builds on.
 *
 * Every field type in the library is a cheap value handle (`PrimeField`,
 * `RationalField`, `SeriesField<C>`) with an associated `element_type`.
 * Elements know their field through `field()`, so generic code can always
 * produce `x.field().zero()` and friends.
 */

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "cda/error.hpp"

namespace cda {

// ---------------------------------------------------------------------------
// Elementary number theory
// ---------------------------------------------------------------------------

/// Deterministic trial division. Adequate for the moduli used here (< 10^6
/// in practice, < 2^32 enforced by PrimeField).
[[nodiscard]] inline bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    if (n < 4) return true;
    if (n % 2 == 0 || n % 3 == 0) return false;
    for (std::uint64_t d = 5; d * d <= n; d += 6) {
        if (n % d == 0 || n % (d + 2) == 0) return false;
    }
    return true;
}

/// base^exp mod m for m < 2^32, so every intermediate product fits in 64 bits.
[[nodiscard]] inline std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) noexcept {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = result * base % m;
        base = base * base % m;
        exp >>= 1U;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Rationals
// ---------------------------------------------------------------------------

class RationalField;

/// Arbitrary precision rational in lowest terms with positive denominator.
/// Also used for exponents of generalized power series.
class Rational {
public:
    Rational() = default;
    Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
    explicit Rational(const mpz_class& n) : v_(n) {}
    Rational(const mpz_class& num, const mpz_class& den) {
        if (den == 0) throw Error("rational with zero denominator");
        v_ = mpq_class(num, den);
        v_.canonicalize();
    }
    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Parses "n" or "n/d" (ASCII or Unicode minus accepted).
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& get() const noexcept { return v_; }
    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }
    [[nodiscard]] bool is_zero() const noexcept { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const noexcept { return v_ == 1; }
    [[nodiscard]] bool is_integer() const noexcept { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(v_); }
    [[nodiscard]] RationalField field() const noexcept;

    [[nodiscard]] Rational inverse() const {
        if (is_zero()) throw Error("division by zero in Q");
        return Rational(mpq_class(1) / v_);
    }
    [[nodiscard]] Rational pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        mpz_class num, den;
        mpz_pow_ui(num.get_mpz_t(), v_.get_num_mpz_t(), static_cast<unsigned long>(n));
        mpz_pow_ui(den.get_mpz_t(), v_.get_den_mpz_t(), static_cast<unsigned long>(n));
        return Rational(num, den);
    }
    [[nodiscard]] Rational abs() const { return Rational(mpq_class(::abs(v_))); }

    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw Error("division by zero in Q");
        v_ /= o.v_;
        return *this;
    }
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    /// "n" or "n/d" with ASCII minus.
    [[nodiscard]] std::string to_string() const { return v_.get_str(); }
    friend std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

private:
    mpq_class v_{0};
};

/// Floor division of integers (exact, arbitrary precision).
[[nodiscard]] inline mpz_class floor_div(const mpz_class& a, const mpz_class& b) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

namespace detail {

inline std::string normalize_minus(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        // U+2212 MINUS SIGN is E2 88 92 in UTF-8.
        if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
            static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
            out.push_back('-');
            i += 2;
        } else {
            out.push_back(text[i]);
        }
    }
    return out;
}

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

inline mpz_class parse_integer(std::string_view text) {
    const std::string s = trim(text);
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) throw Error("malformed integer '" + s + "'");
    for (std::size_t j = i; j < s.size(); ++j) {
        if (s[j] < '0' || s[j] > '9') throw Error("malformed integer '" + s + "'");
    }
    return mpz_class(s[0] == '+' ? s.substr(1) : s, 10);
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
    const std::string s = detail::normalize_minus(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(detail::parse_integer(s));
    return Rational(detail::parse_integer(std::string_view(s).substr(0, slash)),
                    detail::parse_integer(std::string_view(s).substr(slash + 1)));
}

/// The field Q. Stateless handle.
class RationalField {
public:
    using element_type = Rational;

    [[nodiscard]] Rational zero() const { return Rational(0); }
    [[nodiscard]] Rational one() const { return Rational(1); }
    [[nodiscard]] Rational from_integer(const mpz_class& n) const { return Rational(n); }
    [[nodiscard]] Rational from_rational(const Rational& r) const { return r; }
    [[nodiscard]] std::uint64_t characteristic() const noexcept { return 0; }
    [[nodiscard]] std::string describe() const { return "Q"; }
    friend bool operator==(const RationalField&, const RationalField&) noexcept { return true; }
};

inline RationalField Rational::field() const noexcept { return {}; }

// ---------------------------------------------------------------------------
// Prime fields
// ---------------------------------------------------------------------------

class PrimeFieldElement;

/// F_p for a prime p < 2^32.
class PrimeField {
public:
    using element_type = PrimeFieldElement;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!is_prime(p)) throw Error("modulus " + std::to_string(p) + " is not prime");
        if (p >= (std::uint64_t{1} << 32)) throw Error("modulus " + std::to_string(p) + " is too large");
    }

    [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }
    [[nodiscard]] std::uint64_t characteristic() const noexcept { return p_; }
    [[nodiscard]] PrimeFieldElement element(std::uint64_t v) const;
    [[nodiscard]] PrimeFieldElement zero() const;
    [[nodiscard]] PrimeFieldElement one() const;
    [[nodiscard]] PrimeFieldElement from_integer(const mpz_class& n) const;
    [[nodiscard]] PrimeFieldElement from_rational(const Rational& r) const;
    [[nodiscard]] std::string describe() const { return "F_" + std::to_string(p_); }
    friend bool operator==(const PrimeField& a, const PrimeField& b) noexcept { return a.p_ == b.p_; }

private:
    friend class PrimeFieldElement;
    struct Unchecked {};
    PrimeField(std::uint64_t p, Unchecked) noexcept : p_(p) {}

    std::uint64_t p_;
};

/// Canonical representative in [0, p).
class PrimeFieldElement {
public:
    PrimeFieldElement(const PrimeField& f, std::uint64_t v) : p_(f.modulus()), v_(v % f.modulus()) {}

    [[nodiscard]] std::uint64_t value() const noexcept { return v_; }
    [[nodiscard]] std::uint64_t modulus() const noexcept { return p_; }
    [[nodiscard]] PrimeField field() const noexcept { return {p_, PrimeField::Unchecked{}}; }
    [[nodiscard]] bool is_zero() const noexcept { return v_ == 0; }
    [[nodiscard]] bool is_one() const noexcept { return v_ == 1; }

    [[nodiscard]] PrimeFieldElement pow(long n) const {
        if (n < 0) return inverse().pow(-n);
        return make(pow_mod(v_, static_cast<std::uint64_t>(n), p_));
    }
    [[nodiscard]] PrimeFieldElement inverse() const {
        if (v_ == 0) throw Error("division by zero in F_" + std::to_string(p_));
        return make(pow_mod(v_, p_ - 2, p_));
    }

    PrimeFieldElement& operator+=(const PrimeFieldElement& o) {
        check(o);
        v_ = (v_ + o.v_) % p_;
        return *this;
    }
    PrimeFieldElement& operator-=(const PrimeFieldElement& o) {
        check(o);
        v_ = (v_ + p_ - o.v_) % p_;
        return *this;
    }
    PrimeFieldElement& operator*=(const PrimeFieldElement& o) {
        check(o);
        v_ = v_ * o.v_ % p_;
        return *this;
    }
    friend PrimeFieldElement operator+(PrimeFieldElement a, const PrimeFieldElement& b) { return a += b; }
    friend PrimeFieldElement operator-(PrimeFieldElement a, const PrimeFieldElement& b) { return a -= b; }
    friend PrimeFieldElement operator*(PrimeFieldElement a, const PrimeFieldElement& b) { return a *= b; }
    friend PrimeFieldElement operator/(const PrimeFieldElement& a, const PrimeFieldElement& b) {
        return a * b.inverse();
    }
    friend PrimeFieldElement operator-(const PrimeFieldElement& a) { return a.make((a.p_ - a.v_) % a.p_); }
    friend bool operator==(const PrimeFieldElement& a, const PrimeFieldElement& b) noexcept {
        return a.p_ == b.p_ && a.v_ == b.v_;
    }

    [[nodiscard]] std::string to_string() const { return std::to_string(v_); }
    friend std::ostream& operator<<(std::ostream& os, const PrimeFieldElement& x) { return os << x.v_; }

private:
    PrimeFieldElement(std::uint64_t p, std::uint64_t v, int /*raw*/) : p_(p), v_(v) {}
    [[nodiscard]] PrimeFieldElement make(std::uint64_t v) const { return {p_, v, 0}; }
    void check(const PrimeFieldElement& o) const {
        if (o.p_ != p_) throw DomainMismatch("mixing F_" + std::to_string(p_) + " and F_" + std::to_string(o.p_));
    }

    std::uint64_t p_;
    std::uint64_t v_;
};

inline PrimeFieldElement PrimeField::element(std::uint64_t v) const { return {*this, v}; }
inline PrimeFieldElement PrimeField::zero() const { return {*this, 0}; }
inline PrimeFieldElement PrimeField::one() const { return {*this, 1}; }
inline PrimeFieldElement PrimeField::from_integer(const mpz_class& n) const {
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p_);
    return {*this, r.get_ui()};
}
inline PrimeFieldElement PrimeField::from_rational(const Rational& r) const {
    return from_integer(r.numerator()) / from_integer(r.denominator());
}

// ---------------------------------------------------------------------------
// q-th powers and roots of unity
// ---------------------------------------------------------------------------

/// Smallest ξ in F_p with ξ^q = 1 and ξ^k != 1 for 0 < k < q.
[[nodiscard]] inline PrimeFieldElement primitive_qth_root(std::uint64_t p, std::uint64_t q) {
    const PrimeField f(p);
    if (!is_prime(q)) throw Error("q = " + std::to_string(q) + " is not prime");
    if ((p - 1) % q != 0) {
        throw Error("no primitive " + std::to_string(q) + "-th root of unity in F_" + std::to_string(p));
    }
    // q prime: x^q = 1 with x != 1 already forces order exactly q.
    for (std::uint64_t x = 2; x < p; ++x) {
        if (pow_mod(x, q, p) == 1) return f.element(x);
    }
    throw InternalError("primitive root search exhausted F_" + std::to_string(p));
}

/// {x^q : x in F_p^x}, ascending.
[[nodiscard]] inline std::vector<PrimeFieldElement> qth_power_set(std::uint64_t p, std::uint64_t q) {
    const PrimeField f(p);
    std::vector<bool> seen(p, false);
    for (std::uint64_t x = 1; x < p; ++x) seen[pow_mod(x, q, p)] = true;
    std::vector<PrimeFieldElement> out;
    for (std::uint64_t y = 1; y < p; ++y) {
        if (seen[y]) out.push_back(f.element(y));
    }
    return out;
}

/// Euler-style criterion x^{(p-1)/q} = 1; every unit is a q-th power when q does not divide p-1.
[[nodiscard]] inline bool is_qth_power(std::uint64_t p, std::uint64_t q, const PrimeFieldElement& x) {
    if (x.modulus() != p) throw DomainMismatch("element is not in F_" + std::to_string(p));
    if (x.is_zero()) throw Error("0 is not a unit");
    if ((p - 1) % q != 0) return true;
    return pow_mod(x.value(), (p - 1) / q, p) == 1;
}

/// Primes p <= bound with p = 1 mod q.
[[nodiscard]] inline std::vector<std::uint64_t> dirichlet_primes(std::uint64_t q, std::uint64_t bound) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t p = 2; p <= bound; ++p) {
        if ((p - 1) % q == 0 && is_prime(p)) out.push_back(p);
    }
    return out;
}

/// Smallest r with r^q = x, if any.
[[nodiscard]] inline std::optional<PrimeFieldElement> qth_root(const PrimeFieldElement& x, std::uint64_t q) {
    const std::uint64_t p = x.modulus();
    if (x.is_zero()) return x;
    if (!is_qth_power(p, q, x)) return std::nullopt;
    for (std::uint64_t r = 1; r < p; ++r) {
        if (pow_mod(r, q, p) == x.value()) return x.field().element(r);
    }
    throw InternalError("q-th power without a root");
}

/// Exact rational q-th root, if any.
[[nodiscard]] inline std::optional<Rational> qth_root(const Rational& x, std::uint64_t q) {
    if (x.is_zero()) return x;
    if (x.sign() < 0 && q % 2 == 0) return std::nullopt;
    const mpz_class num = abs(x.numerator());
    const mpz_class den = x.denominator();
    mpz_class rn, rd;
    const int exact_n = mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(q));
    const int exact_d = mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(q));
    if (exact_n == 0 || exact_d == 0) return std::nullopt;
    if (x.sign() < 0) rn = -rn;
    return Rational(rn, rd);
}

// Uniform helpers so generic code can treat every field element alike.

[[nodiscard]] inline bool equal_to_precision(const Rational& a, const Rational& b) { return a == b; }
[[nodiscard]] inline bool equal_to_precision(const PrimeFieldElement& a, const PrimeFieldElement& b) {
    return a == b;
}
[[nodiscard]] inline bool is_one(const Rational& a) { return a.is_one(); }
[[nodiscard]] inline bool is_one(const PrimeFieldElement& a) { return a.is_one(); }

}  // namespace cda
