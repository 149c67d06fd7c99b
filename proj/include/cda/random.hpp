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

// Seeded, splittable random streams and samplers for field elements.
//
// A Stream is an mt19937_64 seeded through splitmix64; `split(label)` derives
// an independent child stream from the parent seed and a label, so each
// suite item draws from its own stream and results do not depend on the
// order items run in.

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

#include "cda/base_fields.hpp"
#include "cda/series.hpp"

namespace cda {

[[nodiscard]] constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

class Stream {
public:
    explicit Stream(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }

    /// Child stream keyed by a label (FNV-1a of the label mixed with the seed).
    [[nodiscard]] Stream split(std::string_view label) const {
        std::uint64_t h = 0xcbf29ce484222325ULL;
        for (unsigned char c : label) h = (h ^ c) * 0x100000001b3ULL;
        return Stream(splitmix64(seed_ ^ h));
    }
    [[nodiscard]] Stream split(std::uint64_t index) const { return Stream(splitmix64(seed_ + 0x632be59bd9b4e019ULL * (index + 1))); }

    /// Uniform integer in [lo, hi].
    std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
        return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
    }
    bool coin(double p = 0.5) { return std::bernoulli_distribution(p)(engine_); }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

/// Shape of sampled series: leading exponent range, number of terms after
/// the leading one, and an optional absolute precision.
struct SeriesShape {
    long min_valuation = 0;
    long max_valuation = 0;
    long length = 5;  // exponents v, v+1, ..., v+length-1
    std::optional<long> precision;  // nullopt: exact
    double density = 1.0;           // chance a non-leading exponent is populated
    long denominator = 1;           // exponents are multiples of 1/denominator
};

inline PrimeFieldElement sample(const PrimeField& f, Stream& s, bool nonzero = false) {
    const auto p = static_cast<std::int64_t>(f.modulus());
    return f.element(static_cast<std::uint64_t>(nonzero ? s.uniform(1, p - 1) : s.uniform(0, p - 1)));
}

/// Small nonzero-able rationals n/d with |n| ≤ 5, 1 ≤ d ≤ 3.
inline Rational sample(const RationalField&, Stream& s, bool nonzero = false) {
    std::int64_t n = s.uniform(-5, 5);
    while (nonzero && n == 0) n = s.uniform(-5, 5);
    return Rational(mpz_class(static_cast<long>(n)), mpz_class(static_cast<long>(s.uniform(1, 3))));
}

template <class C>
Series<C> sample(const SeriesField<C>& f, Stream& s, const SeriesShape& shape, bool nonzero = true);

/// Coefficients of nested series fields are sampled as small exact series.
template <class C>
Series<C> sample(const SeriesField<C>& f, Stream& s, bool nonzero = false) {
    SeriesShape inner{-1, 1, 3, std::nullopt, 0.6};
    if (!nonzero && s.coin(0.2)) return f.zero();
    return sample(f, s, inner, true);
}

/// A series with leading exponent in [min_valuation, max_valuation]. With
/// `nonzero` the leading coefficient is a unit, so the valuation is exact.
template <class C>
Series<C> sample(const SeriesField<C>& f, Stream& s, const SeriesShape& shape, bool nonzero) {
    typename Series<C>::Terms terms;
    const long den = shape.denominator;
    auto exponent = [&](long k) { return Rational(mpz_class(k), mpz_class(den)); };
    const long v = static_cast<long>(s.uniform(shape.min_valuation * den, shape.max_valuation * den));
    if (nonzero || s.coin(0.9)) terms.emplace(exponent(v), sample(f.coefficients(), s, true));
    for (long e = v + 1; e < v + shape.length; ++e) {
        if (shape.precision && exponent(e) >= Rational(*shape.precision)) break;
        if (shape.density < 1.0 && !s.coin(shape.density)) continue;
        auto c = sample(f.coefficients(), s, false);
        if (!c.is_zero()) terms.emplace(exponent(e), std::move(c));
    }
    if (shape.precision) {
        if (exponent(v) >= Rational(*shape.precision)) throw Error("sampled valuation lies beyond the requested precision");
        return f.from_terms(std::move(terms), Rational(*shape.precision));
    }
    return f.from_terms(std::move(terms));
}

}  // namespace cda
