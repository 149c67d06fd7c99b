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
 * @file anagram.hpp
 * @brief Anagram classes of F_q^q and the level counts that drive the
 *        combinatorial norm formula.
 *
 * Expanding N(b₀ + b₁u + ... + b_{q-1}u^{q-1}) = ∏_k Σ_i ξ^{ik} b_i u^i gives
 * one monomial per tuple d ∈ F_q^q, weighted by ξ^{Σ̃(d)} with
 * Σ̃(d) = Σ i·d_i. Tuples in the same anagram class share the monomial
 * b_{d_0}···b_{d_{q-1}}, so the class contributes
 *
 *     (Σ_λ N_λ ξ^λ) · b̄_c · u^{Σ c_i},    N_λ = #{d ∈ An(c) : Σ̃(d) = λ}.
 *
 * Since N_λ is constant on λ ≠ 0, that weight is N₀ - N₁ (using Σ_λ ξ^λ = 0).
 * Everything here is exhaustive enumeration; q is limited to {2, 3, 5, 7}.
 */

#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "cda/error.hpp"

namespace cda::anagram {

using Tuple = std::vector<unsigned>;

/// Which integer weight the norm formula attaches to a class.
enum class Convention {
    /// N₀ - N₁; agrees with the product of conjugates.
    LevelDifference,
    /// |An(c)|·(N₀ - N₁), the weight carrying an extra class-size factor.
    ClassSizeTimesLevelDifference,
};

inline void require_supported(unsigned q) {
    if (q != 2 && q != 3 && q != 5 && q != 7) {
        throw Error("anagram enumeration supports q in {2, 3, 5, 7}, got " + std::to_string(q));
    }
}

inline void validate_tuple(const Tuple& d, unsigned q) {
    if (d.size() != q) throw Error("tuple length " + std::to_string(d.size()) + " != q = " + std::to_string(q));
    for (unsigned x : d) {
        if (x >= q) throw Error("tuple entry " + std::to_string(x) + " is outside F_" + std::to_string(q));
    }
}

/// Σ i·d_i mod q.
[[nodiscard]] inline unsigned tilde_sigma(const Tuple& d, unsigned q) {
    validate_tuple(d, q);
    std::uint64_t s = 0;
    for (unsigned i = 0; i < q; ++i) s += static_cast<std::uint64_t>(i) * d[i];
    return static_cast<unsigned>(s % q);
}

/// Integer coordinate sum Σ c_i (not reduced).
[[nodiscard]] inline unsigned coordinate_sum(const Tuple& d) { return std::accumulate(d.begin(), d.end(), 0U); }

[[nodiscard]] inline long long factorial(unsigned n) {
    long long f = 1;
    for (unsigned k = 2; k <= n; ++k) f *= k;
    return f;
}

struct AnagramClass {
    unsigned q = 0;
    Tuple rep;                          // ascending
    std::vector<unsigned> multiplicities;  // l_1, ..., l_k in order of the distinct values
    long long class_size = 0;
    std::vector<long long> level_counts;   // N_0, ..., N_{q-1}

    [[nodiscard]] bool is_constant() const { return multiplicities.size() == 1; }
    [[nodiscard]] bool in_c0() const { return coordinate_sum(rep) % q == 0; }
    [[nodiscard]] long long coefficient(Convention conv = Convention::LevelDifference) const {
        const long long diff = level_counts[0] - level_counts[1];
        return conv == Convention::LevelDifference ? diff : class_size * diff;
    }
};

/// The class of d with level counts from exhaustive enumeration of the
/// distinct permutations of its sorted representative.
[[nodiscard]] inline AnagramClass class_of(Tuple d, unsigned q) {
    require_supported(q);
    validate_tuple(d, q);
    std::sort(d.begin(), d.end());
    AnagramClass c;
    c.q = q;
    c.rep = d;
    for (std::size_t i = 0; i < d.size();) {
        std::size_t j = i;
        while (j < d.size() && d[j] == d[i]) ++j;
        c.multiplicities.push_back(static_cast<unsigned>(j - i));
        i = j;
    }
    c.level_counts.assign(q, 0);
    Tuple perm = d;
    do {
        ++c.level_counts[tilde_sigma(perm, q)];
        ++c.class_size;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return c;
}

/// Integer weight of a class in the norm expansion.
[[nodiscard]] inline long long coefficient_f(const AnagramClass& c, Convention conv = Convention::LevelDifference) {
    return c.coefficient(conv);
}

/// Every class, by ascending representative in lexicographic order.
[[nodiscard]] inline std::vector<AnagramClass> all_classes(unsigned q) {
    require_supported(q);
    std::vector<AnagramClass> out;
    Tuple rep(q, 0);
    // Enumerate non-decreasing tuples.
    while (true) {
        out.push_back(class_of(rep, q));
        int i = static_cast<int>(q) - 1;
        while (i >= 0 && rep[static_cast<unsigned>(i)] == q - 1) --i;
        if (i < 0) break;
        const unsigned v = rep[static_cast<unsigned>(i)] + 1;
        for (unsigned j = static_cast<unsigned>(i); j < q; ++j) rep[j] = v;
    }
    return out;
}

/// Classes whose coordinate sum vanishes mod q.
[[nodiscard]] inline std::vector<AnagramClass> c0_classes(unsigned q) {
    auto all = all_classes(q);
    std::erase_if(all, [](const AnagramClass& c) { return !c.in_c0(); });
    return all;
}

struct ClassCheck {
    AnagramClass cls;
    bool sizes_sum = false;        // Σ N_λ = q!/(l_1!···l_k!)
    bool nonzero_levels_equal = false;
    bool zero_level_criterion = true;  // mixed classes: N_0 = N_1 iff sum != 0
    bool level_size = true;        // mixed, sum != 0: N_λ = (q-1)!/(l_1!···l_k!)
    bool shift_divisibility = true;     // mixed, sum = 0: q | N_0
    bool full_divisibility = true;      // mixed, sum = 0: q(q-1) | N_0
    [[nodiscard]] bool statements_passed() const { return sizes_sum && nonzero_levels_equal && zero_level_criterion; }
    [[nodiscard]] bool counts_passed() const { return level_size && full_divisibility; }
    [[nodiscard]] bool passed() const { return statements_passed() && counts_passed(); }
};

struct LevelReport {
    unsigned q = 0;
    std::vector<ClassCheck> classes;
    [[nodiscard]] std::size_t failures() const { return count([](const ClassCheck& c) { return !c.passed(); }); }
    [[nodiscard]] std::size_t statement_failures() const {
        return count([](const ClassCheck& c) { return !c.statements_passed(); });
    }
    [[nodiscard]] std::size_t count_failures() const {
        return count([](const ClassCheck& c) { return !c.counts_passed(); });
    }
    template <class Pred>
    [[nodiscard]] std::size_t count(Pred pred) const {
        return static_cast<std::size_t>(std::count_if(classes.begin(), classes.end(), pred));
    }
    [[nodiscard]] bool passed() const { return failures() == 0; }
};

/// Checks, for every class of F_q^q: equal level counts on F_q^x; for
/// mixed classes N₀ = N₁ exactly when the coordinate sum is nonzero mod q;
/// q(q-1) | N₀ for mixed zero-sum classes; N_λ = (q-1)!/(l₁!···l_k!) for
/// nonzero-sum classes. The weaker q | N₀ is recorded separately: the cyclic
/// shift acts freely on mixed zero-sum anagrams, but F_q^x need not.
[[nodiscard]] inline LevelReport verify_lemma_combin(unsigned q) {
    require_supported(q);
    LevelReport report;
    report.q = q;
    for (auto& cls : all_classes(q)) {
        ClassCheck chk;
        long long denom = 1;
        for (unsigned l : cls.multiplicities) denom *= factorial(l);
        const auto& n = cls.level_counts;
        chk.sizes_sum = std::accumulate(n.begin(), n.end(), 0LL) == cls.class_size &&
                        cls.class_size == factorial(q) / denom;
        chk.nonzero_levels_equal = std::all_of(n.begin() + 1, n.end(), [&](long long x) { return x == n[1]; });
        const bool sum_nonzero = coordinate_sum(cls.rep) % q != 0;
        if (!cls.is_constant()) {
            chk.zero_level_criterion = (n[0] == n[1]) == sum_nonzero;
            if (sum_nonzero) {
                const long long expected = factorial(q - 1) / denom;
                chk.level_size = std::all_of(n.begin(), n.end(), [&](long long x) { return x == expected; });
            } else {
                chk.shift_divisibility = n[0] % q == 0;
                chk.full_divisibility = n[0] % (static_cast<long long>(q) * (q - 1)) == 0;
            }
        }
        chk.cls = std::move(cls);
        report.classes.push_back(std::move(chk));
    }
    return report;
}

/// b_0^{e_0}···b_{q-1}^{e_{q-1}} · t^{t_power} with an integer coefficient.
struct NormMonomial {
    std::vector<unsigned> b_exponents;
    unsigned t_power = 0;
    long long coefficient = 0;
    bool operator==(const NormMonomial&) const = default;
};

/// The norm as an integer polynomial in b_0..b_{q-1} and t, one monomial per
/// class of C₀ with nonzero weight, ordered by t-power then representative.
[[nodiscard]] inline std::vector<NormMonomial> norm_closed_form(unsigned q, Convention conv = Convention::LevelDifference) {
    std::vector<NormMonomial> out;
    for (const auto& c : c0_classes(q)) {
        const long long f = c.coefficient(conv);
        if (f == 0) continue;
        NormMonomial m;
        m.b_exponents.assign(q, 0);
        for (unsigned x : c.rep) ++m.b_exponents[x];
        m.t_power = coordinate_sum(c.rep) / q;
        m.coefficient = f;
        out.push_back(std::move(m));
    }
    std::stable_sort(out.begin(), out.end(), [](const NormMonomial& a, const NormMonomial& b) { return a.t_power < b.t_power; });
    return out;
}

/// "b0^3 - 3*t*b0*b1*b2 + t*b1^3 + t^2*b2^3".
[[nodiscard]] inline std::string closed_form_text(const std::vector<NormMonomial>& poly) {
    if (poly.empty()) return "0";
    std::string out;
    for (const auto& m : poly) {
        std::vector<std::string> factors;
        const long long mag = m.coefficient < 0 ? -m.coefficient : m.coefficient;
        if (mag != 1) factors.push_back(std::to_string(mag));
        if (m.t_power == 1) factors.emplace_back("t");
        if (m.t_power > 1) factors.push_back("t^" + std::to_string(m.t_power));
        for (std::size_t i = 0; i < m.b_exponents.size(); ++i) {
            if (m.b_exponents[i] == 0) continue;
            std::string b = "b" + std::to_string(i);
            if (m.b_exponents[i] > 1) b += "^" + std::to_string(m.b_exponents[i]);
            factors.push_back(std::move(b));
        }
        std::string term;
        for (std::size_t i = 0; i < factors.size(); ++i) term += (i ? "*" : "") + factors[i];
        if (term.empty()) term = "1";
        if (out.empty()) {
            out = (m.coefficient < 0 ? "-" : "") + term;
        } else {
            out += (m.coefficient < 0 ? " - " : " + ") + term;
        }
    }
    return out;
}

/// d ↦ (d_{ν·0}, d_{ν·1}, ..., d_{ν·(q-1)}), indices mod q.
[[nodiscard]] inline Tuple reindex_multiplicative(const Tuple& d, unsigned nu, unsigned q) {
    Tuple out(q);
    for (unsigned i = 0; i < q; ++i) out[i] = d[(static_cast<std::uint64_t>(nu) * i) % q];
    return out;
}

/// d ↦ (d_1, ..., d_{q-1}, d_0).
[[nodiscard]] inline Tuple cyclic_shift(const Tuple& d) {
    Tuple out(d.begin() + 1, d.end());
    out.push_back(d.front());
    return out;
}

[[nodiscard]] inline std::string tuple_to_string(const Tuple& d) {
    std::string s = "(";
    for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
    return s + ")";
}

}  // namespace cda::anagram
