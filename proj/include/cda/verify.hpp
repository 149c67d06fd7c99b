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

// Seeded verification campaigns.
//
// Every suite item draws from Stream(seed).split(claim id), and each trial
// from a further split by trial index, so a witness is replayable from
// (seed, claim, parameters, trial). Reports are JSON lines; elapsed time is
// only included on request so that reports for a fixed seed are
// byte-identical.

#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cda/albert.hpp"
#include "cda/anagram.hpp"
#include "cda/cyclic_algebra.hpp"
#include "cda/io.hpp"
#include "cda/kummer.hpp"
#include "cda/random.hpp"
#include "cda/text_format.hpp"

namespace cda {

struct VerificationReport {
    std::string claim;
    Json parameters = Json::object();
    std::size_t trials = 0;
    std::size_t failures = 0;
    std::vector<std::string> witnesses;  // at most max_witnesses
    Json details = Json::object();
    std::optional<double> elapsed;  // seconds
    std::uint64_t seed = 0;

    static constexpr std::size_t max_witnesses = 8;

    [[nodiscard]] bool passed() const { return failures == 0; }
    void fail(std::string witness) {
        ++failures;
        if (witnesses.size() < max_witnesses) witnesses.push_back(std::move(witness));
    }
    void check(bool ok, const std::string& what) {
        ++trials;
        if (!ok) fail(what);
    }

    [[nodiscard]] Json to_json() const {
        Json j;
        j["claim"] = claim;
        j["seed"] = seed;
        j["parameters"] = parameters;
        j["trials"] = trials;
        j["failures"] = failures;
        j["passed"] = passed();
        j["witnesses"] = witnesses;
        j["details"] = details;
        if (elapsed) j["elapsed"] = *elapsed;
        return j;
    }
};

struct SuiteConfig {
    std::vector<std::pair<std::uint64_t, unsigned>> contexts{{7, 3}, {13, 3}, {11, 5}};
    long precision = 20;
    long oracle_precision = 30;
    std::optional<std::size_t> trials;  // overrides every randomized count when set
    std::uint64_t seed = 0;
    bool timings = false;
    std::vector<std::string> claims;  // empty: all

    /// Randomized count for a suite item: the override, else the acceptance count.
    [[nodiscard]] std::size_t count(std::size_t acceptance) const { return trials ? *trials : acceptance; }
};

/// Rejects pairings with q ∤ p-1 and other malformed settings.
inline void validate(const SuiteConfig& c) {
    if (c.contexts.empty()) throw ConfigError("no (p, q) contexts configured");
    for (const auto& [p, q] : c.contexts) {
        if (!is_prime(p)) throw ConfigError(std::to_string(p) + " is not prime");
        if (q != 2 && q != 3 && q != 5 && q != 7) throw ConfigError("q must be one of 2, 3, 5, 7, got " + std::to_string(q));
        if ((p - 1) % q != 0) {
            throw ConfigError("q = " + std::to_string(q) + " does not divide p - 1 = " + std::to_string(p - 1));
        }
    }
    if (c.precision < 4) throw ConfigError("precision must be at least 4");
    if (c.oracle_precision < 4) throw ConfigError("oracle precision must be at least 4");
    if (c.trials && *c.trials == 0) throw ConfigError("trials must be positive");
}

/// Overlays a JSON config object: {"contexts": [[p, q], ...], "precision",
/// "oracle_precision", "trials", "seed", "claims"}.
inline void apply_config_json(SuiteConfig& c, const Json& j) {
    try {
        if (!j.is_object()) throw ConfigError("config must be a JSON object");
        for (const auto& [key, value] : j.items()) {
            if (key == "contexts") {
                c.contexts.clear();
                for (const auto& pq : value) c.contexts.emplace_back(pq.at(0).get<std::uint64_t>(), pq.at(1).get<unsigned>());
            } else if (key == "precision") {
                c.precision = value.get<long>();
            } else if (key == "oracle_precision") {
                c.oracle_precision = value.get<long>();
            } else if (key == "trials") {
                c.trials = value.get<std::size_t>();
            } else if (key == "seed") {
                c.seed = value.get<std::uint64_t>();
            } else if (key == "claims") {
                c.claims = value.get<std::vector<std::string>>();
            } else {
                throw ConfigError("unknown config key: " + key);
            }
        }
    } catch (const nlohmann::json::exception& e) {
        throw ConfigError(std::string("malformed config: ") + e.what());
    }
}

/// CDA_PRECISION replaces the built-in default precision.
inline void apply_environment(SuiteConfig& c) {
    const char* env = std::getenv("CDA_PRECISION");
    if (env == nullptr || *env == '\0') return;
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0') throw ConfigError(std::string("CDA_PRECISION is not an integer: ") + env);
    c.precision = v;
}

namespace suite {

inline std::string context_label(std::uint64_t p, unsigned q) {
    return "F_" + std::to_string(p) + "((t)), q=" + std::to_string(q);
}

inline Json contexts_json(const SuiteConfig& c) {
    Json a = Json::array();
    for (const auto& [p, q] : c.contexts) a.push_back({p, q});
    return a;
}

template <class F>
KummerElement<F> sample_kummer(const KummerContext<F>& k, Stream& s, const SeriesShape& shape) {
    std::vector<typename F::element_type> c;
    for (unsigned i = 0; i < k.q(); ++i) c.push_back(s.coin(0.15) ? k.field().zero() : sample(k.field(), s, shape, true));
    if (std::all_of(c.begin(), c.end(), [](const auto& x) { return x.is_zero(); })) c[0] = sample(k.field(), s, shape, true);
    return k.element(std::move(c));
}

template <class F>
AlgebraElement<F> sample_algebra(const CyclicAlgebra<F>& d, Stream& s, const SeriesShape& shape) {
    while (true) {
        std::vector<typename F::element_type> c;
        for (std::size_t i = 0; i < d.n(); ++i) c.push_back(s.coin(0.3) ? d.field().zero() : sample(d.field(), s, shape, true));
        auto a = d.element(std::move(c));
        if (!a.is_zero()) return a;
    }
}

inline AlgebraElement<RationalField> sample_algebra(const CyclicAlgebra<RationalField>& d, Stream& s) {
    while (true) {
        std::vector<Rational> c;
        for (std::size_t i = 0; i < d.n(); ++i) c.push_back(sample(RationalField{}, s));
        auto a = d.element(std::move(c));
        if (!a.is_zero()) return a;
    }
}

template <class E>
std::vector<E> sample_nonzero_vector(std::size_t n, const std::function<E(bool)>& draw, Stream& s) {
    while (true) {
        std::vector<E> v;
        bool any = false;
        for (std::size_t i = 0; i < n; ++i) {
            v.push_back(s.coin(0.4) ? draw(false) : draw(true));
            any = any || !v.back().is_zero();
        }
        if (any) return v;
    }
}

template <class E>
bool all_zero(const std::vector<E>& v) {
    for (const auto& x : v) {
        if (!x.is_zero()) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------

/// Level counts, zero-level criterion and divisibilities over every class.
inline VerificationReport anagram_levels(const SuiteConfig&) {
    VerificationReport r;
    r.claim = "anagram-level-counts";
    r.parameters["q"] = {2, 3, 5, 7};
    for (unsigned q : {2U, 3U, 5U, 7U}) {
        const auto rep = anagram::verify_lemma_combin(q);
        Json d;
        d["classes"] = rep.classes.size();
        d["statement_failures"] = rep.statement_failures();
        d["level_size_failures"] = rep.count([](const anagram::ClassCheck& c) { return !c.level_size; });
        d["q_divides_n0_failures"] = rep.count([](const anagram::ClassCheck& c) { return !c.shift_divisibility; });
        d["q_q_minus_1_divides_n0_failures"] = rep.count([](const anagram::ClassCheck& c) { return !c.full_divisibility; });
        r.details["q=" + std::to_string(q)] = std::move(d);
        for (const auto& c : rep.classes) {
            std::string levels;
            for (std::size_t i = 0; i < c.cls.level_counts.size(); ++i) {
                levels += (i ? "," : "") + std::to_string(c.cls.level_counts[i]);
            }
            std::string why;
            if (!c.statements_passed()) why = "level statement";
            else if (!c.level_size) why = "level size";
            else if (!c.full_divisibility) why = "q(q-1) does not divide N_0";
            r.check(c.passed(), "q=" + std::to_string(q) + " " + anagram::tuple_to_string(c.cls.rep) + " N=(" + levels + "): " + why);
        }
    }
    return r;
}

/// norm_formula against the conjugate product.
inline VerificationReport norm_formula_oracle(const SuiteConfig& cfg) {
    VerificationReport r;
    r.claim = "norm-formula-oracle";
    const std::size_t n = cfg.count(500);
    r.parameters["contexts"] = contexts_json(cfg);
    r.parameters["precision"] = cfg.oracle_precision;
    r.parameters["samples_per_context"] = n;
    r.parameters["convention"] = "f = N_0 - N_1";
    const Stream root = Stream(cfg.seed).split(r.claim);
    for (const auto& [p, q] : cfg.contexts) {
        const auto k = laurent_kummer(p, q, cfg.oracle_precision);
        const Stream cs = root.split(context_label(p, q));
        const SeriesShape shape{-3, 3, cfg.oracle_precision + 3, cfg.oracle_precision, 0.8};
        for (std::size_t i = 0; i < n; ++i) {
            Stream s = cs.split(i);
            const auto a = sample_kummer(k, s, shape);
            const auto oracle = norm_oracle(a);
            const auto formula = norm_formula(a);
            r.check(equal_to_precision(oracle, formula),
                    context_label(p, q) + " trial " + std::to_string(i) + ": a = " + a.to_string());
        }
    }
    return r;
}

/// Generated closed forms for q = 2, 3 against the expected polynomials.
inline VerificationReport norm_closed_forms(const SuiteConfig&) {
    VerificationReport r;
    r.claim = "norm-closed-forms";
    using M = anagram::NormMonomial;
    const std::vector<std::pair<unsigned, std::vector<M>>> expected{
        {2, {{{2, 0}, 0, 1}, {{0, 2}, 1, -1}}},
        {3, {{{3, 0, 0}, 0, 1}, {{1, 1, 1}, 1, -3}, {{0, 3, 0}, 1, 1}, {{0, 0, 3}, 2, 1}}},
    };
    for (const auto& [q, want] : expected) {
        const auto got = anagram::norm_closed_form(q);
        r.details["q=" + std::to_string(q)] = anagram::closed_form_text(got);
        r.check(got == want, "q=" + std::to_string(q) + ": generated " + anagram::closed_form_text(got) + ", expected " +
                                 anagram::closed_form_text(want));
    }
    return r;
}

/// Predicted norm valuation against the valuation of the oracle norm.
inline VerificationReport norm_valuation_check(const SuiteConfig& cfg) {
    VerificationReport r;
    r.claim = "norm-valuation";
    const std::size_t n = cfg.count(500);
    r.parameters["contexts"] = contexts_json(cfg);
    r.parameters["coordinate_valuations"] = {-5, 5};
    r.parameters["samples_per_context"] = n;
    const Stream root = Stream(cfg.seed).split(r.claim);
    for (const auto& [p, q] : cfg.contexts) {
        const auto k = laurent_kummer(p, q, cfg.precision);
        const Stream cs = root.split(context_label(p, q));
        const SeriesShape shape{-5, 5, 4, std::nullopt, 0.7};
        for (std::size_t i = 0; i < n; ++i) {
            Stream s = cs.split(i);
            const auto a = sample_kummer(k, s, shape);
            const Rational predicted = norm_valuation(a);
            const Rational actual = finite_valuation(norm_oracle(a));
            r.check(predicted == actual, context_label(p, q) + " trial " + std::to_string(i) + ": predicted " +
                                             predicted.to_string() + ", actual " + actual.to_string());
        }
    }
    return r;
}

/// Residues of unit norms lie in F_p^{xq}, every q-th power is attained, and
/// is_norm preimages round-trip.
inline VerificationReport residue_of_norms_check(const SuiteConfig& cfg) {
    VerificationReport r;
    r.claim = "residue-of-norms";
    const std::size_t n = cfg.count(500);
    r.parameters["contexts"] = contexts_json(cfg);
    r.parameters["precision"] = cfg.precision;
    r.parameters["samples_per_context"] = n;
    const Stream root = Stream(cfg.seed).split(r.claim);
    for (const auto& [p, q] : cfg.contexts) {
        const auto k = laurent_kummer(p, q, cfg.precision);
        const auto& f = k.field();
        const Stream cs = root.split(context_label(p, q));
        const SeriesShape unit{0, 0, 6, cfg.precision, 0.8};
        const SeriesShape integral{0, 2, 6, cfg.precision, 0.8};
        std::vector<KummerElement<LaurentFp>> samples;
        for (std::size_t i = 0; i < n; ++i) {
            Stream s = cs.split(i);
            std::vector<Series<PrimeField>> c{sample(f, s, unit, true)};
            for (unsigned j = 1; j < q; ++j) c.push_back(s.coin(0.2) ? f.zero() : sample(f, s, integral, true));
            samples.push_back(k.element(std::move(c)));
        }
        const auto rep = residue_of_norms(k, std::span<const KummerElement<LaurentFp>>(samples));
        r.details[context_label(p, q)] = to_json(rep);
        r.trials += rep.samples;
        for (auto y : rep.outside) r.fail(context_label(p, q) + ": residue " + std::to_string(y) + " is not a q-th power");
        if (rep.zero_residues != 0) r.fail(context_label(p, q) + ": " + std::to_string(rep.zero_residues) + " unit norms with zero residue");
        r.check(rep.surjective, context_label(p, q) + ": not every q-th power residue has a constructed preimage");

        // y·(1 + higher terms) for each q-th power y.
        Stream s = cs.split("round-trip");
        for (const auto y : rep.qth_powers) {
            const auto tail = sample(f, s, SeriesShape{1, 1, 8, cfg.precision, 0.8}, true);
            const auto x = f.constant(f.coefficients().element(y)) * (f.one() + tail);
            const auto d = is_norm(k, x);
            bool ok = d.is_norm && d.preimage.has_value();
            if (ok) {
                const auto nx = norm_oracle(*d.preimage);
                ok = equal_to_precision(nx, x) && nx.precision() && *nx.precision() >= *x.precision();
            }
            r.check(ok, context_label(p, q) + ": preimage round trip failed for " + x.to_string());
        }
    }
    return r;
}

/// The three certified algebras over F_7((t)), q = 3.
inline VerificationReport division_certification(const SuiteConfig& cfg) {
    VerificationReport r;
    r.claim = "division-certification";
    const std::size_t pairs = cfg.count(2000);
    const std::size_t inversions = cfg.count(200);
    r.parameters["field"] = "F_7((t))";
    r.parameters["q"] = 3;
    r.parameters["pairs"] = pairs;
    r.parameters["inversions"] = inversions;
    r.parameters["precision"] = cfg.precision;
    const Stream root = Stream(cfg.seed).split(r.claim);
    const auto k = laurent_kummer(7, 3, cfg.precision);
    const auto& f = k.field();

    const CyclicAlgebra<LaurentFp> d2(k, f.from_integer(2));
    const auto c2 = is_division(d2);
    r.check(c2.is_division && c2.norm.residue && c2.norm.residue->value() == 2, "alpha = 2 not certified division");
    r.details["alpha=2"] = to_json(c2.norm);

    const SeriesShape exact{-2, 2, 3, std::nullopt, 0.7};
    const Stream ps = root.split("pairs");
    for (std::size_t i = 0; i < pairs; ++i) {
        Stream s = ps.split(i);
        const auto a = sample_algebra(d2, s, exact);
        const auto b = sample_algebra(d2, s, exact);
        r.check(!(a * b).is_zero(), "pair " + std::to_string(i) + ": " + a.to_string() + " * " + b.to_string() + " = 0");
    }
    const Stream is = root.split("inversions");
    const Rational target(cfg.precision);
    for (std::size_t i = 0; i < inversions; ++i) {
        Stream s = is.split(i);
        const auto a = sample_algebra(d2, s, exact);
        bool ok = false;
        try {
            const auto x = invert(a, target);
            ok = equal_to_precision(a * x, d2.one()) && equal_to_precision(x * a, d2.one());
            for (const auto& c : x.coords()) ok = ok && (!c.precision() || *c.precision() >= target);
        } catch (const Error&) {
            ok = false;
        }
        r.check(ok, "inversion " + std::to_string(i) + ": " + a.to_string());
    }

    const CyclicAlgebra<LaurentFp> d6(k, f.from_integer(6));
    const auto c6 = is_division(d6);
    r.details["alpha=6"] = to_json(c6.norm);
    r.check(!c6.is_division && c6.norm.preimage && c6.norm.preimage->to_string() == "[3; 0; 0]",
            "alpha = 6 not certified non-division by the preimage 3");
    const auto [l6, r6] = zero_divisor_witness(d6, f.from_integer(3));
    const auto p6 = l6 * r6;
    r.details["alpha=6"]["witness"] = {l6.to_display(), r6.to_display()};
    r.check(l6.to_display() == "(4) + (1)*X" && r6.to_display() == "(2) + (3)*X + (1)*X^2" && p6.is_zero() && p6.is_exact(),
            "alpha = 6 witness (X - 3)(X^2 + 3X + 2) is not an exact zero product");

    const CyclicAlgebra<LaurentFp> dt(k, f.variable());
    const auto ct = is_division(dt);
    r.details["alpha=t"] = to_json(ct.norm);
    r.check(!ct.is_division && ct.norm.preimage && ct.norm.preimage->to_string() == "[0; 1; 0]",
            "alpha = t not certified non-division by the preimage u");
    const auto [lt, rt] = norm_zero_divisor_witness(dt, *ct.norm.preimage);
    const auto pt = lt * rt;
    r.details["alpha=t"]["witness"] = {lt.to_display(), rt.to_display()};
    r.check(!lt.is_zero() && !rt.is_zero() && pt.is_zero() && pt.is_exact(), "alpha = t witness product is not an exact zero");
    return r;
}

template <class F, class Draw>
void constants_round_trip(VerificationReport& r, const std::string& name, const CyclicAlgebra<F>& d, std::size_t pairs,
                          Stream root, Draw draw) {
    const auto s = structure_constants(d);
    r.check(is_associative_unital(s), name + ": structure constants are not associative and unital");
    for (std::size_t i = 0; i < pairs; ++i) {
        Stream st = root.split(i);
        const auto a = draw(st), b = draw(st);
        r.check(vectors_equal_to_precision(constants_mul(a.coords(), b.coords(), s), relation_mul(a, b).coords()),
                name + " pair " + std::to_string(i) + ": " + a.to_string() + ", " + b.to_string());
    }
    const auto json = constants_to_json(s);
    const auto text = json.dump();
    const auto loaded = constants_from_json(d.field(), Json::parse(text));
    r.check(same_constants(s, loaded) && constants_to_json(loaded).dump() == text, name + ": JSON round trip changed the table");
    Stream st = root.split("reloaded");
    for (int i = 0; i < 20; ++i) {
        const auto a = draw(st), b = draw(st);
        r.check(vectors_equal_to_precision(constants_mul(a.coords(), b.coords(), loaded), relation_mul(a, b).coords()),
                name + ": reloaded constants disagree with relation_mul");
    }
    r.details[name] = {{"n", s.n()}, {"field", s.field().describe()}};
}

/// constants_mul against relation_mul, and the JSON export.
inline VerificationReport structure_constants_check(const SuiteConfig& cfg) {
    VerificationReport r;
    r.claim = "structure-constants";
    const std::size_t pairs = cfg.count(500);
    r.parameters["pairs"] = pairs;
    r.parameters["algebras"] = {"Hamilton over Q", "F_7((t)), q=3, alpha=2"};
    const Stream root = Stream(cfg.seed).split(r.claim);
    const CyclicAlgebra<RationalField> h(rational_quadratic(Rational(-1)), Rational(-1));
    constants_round_trip(r, "hamilton", h, pairs, root.split("hamilton"),
                         [&](Stream& s) { return sample_algebra(h, s); });
    const auto k = laurent_kummer(7, 3, cfg.precision);
    const CyclicAlgebra<LaurentFp> d(k, k.field().from_integer(2));
    const SeriesShape shape{-2, 2, 3, std::nullopt, 0.7};
    constants_round_trip(r, "f7-q3", d, pairs, root.split("f7-q3"), [&](Stream& s) { return sample_algebra(d, s, shape); });
    return r;
}

/// (K/F, σ₀, x) over F_7((x^Γ))((t^Γ)), Γ = Z[1/7], q = 3.
inline VerificationReport hahn_tower_division(const SuiteConfig& cfg) {
    VerificationReport r;
    r.claim = "hahn-tower-division";
    const std::size_t products = cfg.count(200);
    r.parameters["field"] = "F_7((x^Z[1/7]))((t^Z[1/7]))";
    r.parameters["q"] = 3;
    r.parameters["alpha"] = "x";
    r.parameters["products"] = products;
    r.parameters["precision"] = cfg.precision;
    const auto k = hahn_kummer(7, 3, 7, cfg.precision);
    const auto& f = k.field();
    const auto x = f.constant(f.coefficients().variable());
    const CyclicAlgebra<HahnTowerFp> d(k, x);
    const auto cert = is_division(d);
    r.details["certificate"] = to_json(cert.norm);
    r.check(cert.is_division && cert.norm.reason == NormDecision<HahnTowerFp>::Reason::ResidueNotQthPower,
            "alpha = x is not certified division by its residue");
    r.check(cert.norm.residue && !is_qth_power_in_tower(*cert.norm.residue, 3), "residue x is a cube in F_7((x^Z[1/7]))");
    r.check(!f.coefficients().group().contains(finite_valuation(f.coefficients().variable()) / Rational(3)),
            "v(x)/3 lies in the value group");

    const Stream root = Stream(cfg.seed).split(r.claim);
    SeriesShape shape{-1, 1, 3, std::nullopt, 0.6};
    shape.denominator = 7;
    for (std::size_t i = 0; i < products; ++i) {
        Stream s = root.split(i);
        const auto a = sample_algebra(d, s, shape);
        const auto b = sample_algebra(d, s, shape);
        r.check(!(a * b).is_zero(), "product " + std::to_string(i) + ": " + a.to_string() + " * " + b.to_string() + " = 0");
    }
    return r;
}

/// Albert form sampling over F and K, biquaternion products and
/// associativity, and the sum-of-squares leading data.
inline VerificationReport albert_anisotropy(const SuiteConfig& cfg) {
    VerificationReport r;
    r.claim = "albert-anisotropy";
    const std::size_t form_trials = cfg.count(5000);
    const std::size_t pairs = cfg.count(2000);
    const std::size_t triples = cfg.count(500);
    const std::size_t sums = cfg.count(1000);
    const auto f = laurent_q2(cfg.precision);
    const auto [d1, d2] = standard_biquaternion_factors(f);
    const auto phi = albert_form(d1, d2);
    const auto witness = nonsquare_witness(f);
    r.parameters["form"] = phi.to_string();
    r.parameters["extension"] = "gamma^2 = " + witness.element.to_string();
    r.parameters["form_trials"] = form_trials;
    r.parameters["pairs"] = pairs;
    r.parameters["triples"] = triples;
    r.parameters["square_sums"] = sums;
    r.check(phi.to_string() == "((X), (-1), (X), (X), (-1)*Y, (-X)*Y)", "Albert form coefficients: " + phi.to_string());
    r.check(witness.expansion_checked && !witness.is_square, "2 + 2X^2 not certified a non-square");

    const Stream root = Stream(cfg.seed).split(r.claim);
    const SeriesShape shape{-1, 1, 3, std::nullopt, 0.7};
    Stream sf = root.split("form-over-F");
    const auto over_f = anisotropy_sample_test(phi, f, form_trials, sf, shape);
    const QuadraticExtension<LaurentQ2> kext(f, witness.element);
    Stream sk = root.split("form-over-K");
    const auto over_k = anisotropy_sample_test(phi, kext, form_trials, sk, shape);
    for (const auto* rep : {&over_f, &over_k}) {
        r.trials += rep->trials;
        for (const auto& c : rep->counterexamples) r.fail("isotropic vector " + c);
    }
    r.details["over_F"] = to_json(over_f);
    r.details["over_K"] = to_json(over_k);

    const auto b = tensor_product(d1, d2);
    using E = Series<SeriesField<RationalField>>;
    auto draw = [&](Stream& s) {
        const std::function<E(bool)> one = [&](bool nz) { return nz ? sample(f, s, shape, true) : f.zero(); };
        return sample_nonzero_vector<E>(16, one, s);
    };
    const Stream bs = root.split("biquaternion-pairs");
    for (std::size_t i = 0; i < pairs; ++i) {
        Stream s = bs.split(i);
        const auto x = draw(s), y = draw(s);
        r.check(!all_zero(b.mul(x, y)), "biquaternion pair " + std::to_string(i) + " has zero product");
    }
    const Stream ts = root.split("biquaternion-triples");
    for (std::size_t i = 0; i < triples; ++i) {
        Stream s = ts.split(i);
        const auto x = draw(s), y = draw(s), z = draw(s);
        r.check(vectors_equal_to_precision(b.mul(b.mul(x, y), z), b.mul(x, b.mul(y, z))),
                "biquaternion triple " + std::to_string(i) + " is not associative");
    }
    r.check(is_associative_unital(b.constants()), "biquaternion basis is not associative and unital");

    const Stream ss = root.split("square-sums");
    for (std::size_t i = 0; i < sums; ++i) {
        Stream s = ss.split(i);
        const auto len = static_cast<std::size_t>(s.uniform(1, 6));
        std::vector<E> summands;
        for (std::size_t j = 0; j < len; ++j) summands.push_back(sample(f, s, shape, true));
        const auto data = sos_leading_data(summands);
        r.check(data.holds(), "square sum " + std::to_string(i) + ": v_Y = " + data.v_y.to_string() +
                                  ", v_X = " + data.v_x.to_string() + ", leading " + data.ac_x.to_string());
    }
    return r;
}

struct Item {
    const char* claim;
    VerificationReport (*run)(const SuiteConfig&);
};

inline const std::vector<Item>& items() {
    static const std::vector<Item> all{
        {"anagram-level-counts", anagram_levels},
        {"norm-formula-oracle", norm_formula_oracle},
        {"norm-closed-forms", norm_closed_forms},
        {"norm-valuation", norm_valuation_check},
        {"residue-of-norms", residue_of_norms_check},
        {"division-certification", division_certification},
        {"structure-constants", structure_constants_check},
        {"hahn-tower-division", hahn_tower_division},
        {"albert-anisotropy", albert_anisotropy},
    };
    return all;
}

}  // namespace suite

[[nodiscard]] inline std::vector<std::string> claim_ids() {
    std::vector<std::string> out;
    for (const auto& it : suite::items()) out.emplace_back(it.claim);
    return out;
}

/// Runs the selected claims in suite order. Elapsed time is measured always
/// but only reported with `timings`; `on_report` sees each report as it
/// completes.
[[nodiscard]] inline std::vector<VerificationReport> run_suite(
    const SuiteConfig& cfg, const std::function<void(const VerificationReport&)>& on_report = {}) {
    validate(cfg);
    for (const auto& c : cfg.claims) {
        const auto ids = claim_ids();
        if (std::find(ids.begin(), ids.end(), c) == ids.end()) throw ConfigError("unknown claim id: " + c);
    }
    std::vector<VerificationReport> out;
    for (const auto& it : suite::items()) {
        if (!cfg.claims.empty() && std::find(cfg.claims.begin(), cfg.claims.end(), it.claim) == cfg.claims.end()) continue;
        const auto start = std::chrono::steady_clock::now();
        VerificationReport r;
        try {
            r = it.run(cfg);
        } catch (const Error& e) {
            r = VerificationReport{};
            r.claim = it.claim;
            r.fail(std::string("error: ") + e.what());
        }
        r.seed = cfg.seed;
        const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
        r.elapsed = dt.count();
        if (on_report) on_report(r);
        out.push_back(std::move(r));
    }
    return out;
}

/// JSON lines; `timings` keeps the elapsed field.
[[nodiscard]] inline std::string reports_to_jsonl(const std::vector<VerificationReport>& reports, bool timings) {
    std::string out;
    for (auto r : reports) {
        if (!timings) r.elapsed.reset();
        out += r.to_json().dump() + "\n";
    }
    return out;
}

}  // namespace cda
