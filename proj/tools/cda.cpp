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

// cda: command-line front end.
//
// Exit codes: 0 success, 1 verification failure (or a zero divisor where an
// inverse was asked for), 2 usage or input error.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cda/cda.hpp"

namespace {

using namespace cda;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

/// Raised for verification failures inside a subcommand.
struct Failure {
    int code = kFail;
};

void emit(const Json& j, bool pretty = true) { std::cout << (pretty ? j.dump(2) : j.dump()) << '\n'; }

long default_precision() {
    SuiteConfig c;
    apply_environment(c);
    return c.precision;
}

// ---------------------------------------------------------------------------
// anagram-table

struct AnagramOpts {
    unsigned q = 3;
    bool json = false;
};

void run_anagram_table(const AnagramOpts& o) {
    const auto classes = anagram::all_classes(o.q);
    if (o.json) {
        Json rows = Json::array();
        for (const auto& c : classes) rows.push_back(to_json(c));
        emit(rows);
        return;
    }
    std::cout << "representative  multiplicities  size  N_lambda  f  C0\n";
    for (const auto& c : classes) {
        std::string mult, levels;
        for (std::size_t i = 0; i < c.multiplicities.size(); ++i) mult += (i ? "," : "") + std::to_string(c.multiplicities[i]);
        for (std::size_t i = 0; i < c.level_counts.size(); ++i) levels += (i ? "," : "") + std::to_string(c.level_counts[i]);
        std::cout << anagram::tuple_to_string(c.rep) << "  (" << mult << ")  " << c.class_size << "  (" << levels << ")  "
                  << c.coefficient() << "  " << (c.in_c0() ? "yes" : "no") << '\n';
    }
}

// ---------------------------------------------------------------------------
// norm, is-norm

struct NormOpts {
    std::uint64_t p = 7;
    unsigned q = 3;
    std::optional<long> prec;
    std::optional<std::uint64_t> hahn;
    std::string element;
    std::string x;
};

template <class F>
void print_norm(const KummerContext<F>& k, const std::string& text) {
    const auto a = k.element(parse_coordinates(k.field(), text));
    Json j;
    j["field"] = k.describe();
    j["element"] = a.to_string();
    j["oracle"] = norm_oracle(a).to_string();
    j["formula"] = norm_formula(a).to_string();
    j["agree"] = equal_to_precision(norm_oracle(a), norm_formula(a));
    if (!a.is_zero()) j["valuation"] = norm_valuation(a).to_string();
    emit(j);
}

template <class F>
void print_is_norm(const KummerContext<F>& k, const std::string& text) {
    const auto x = parse_element(k.field(), text);
    if (x.is_zero()) throw ConfigError("x must be nonzero");
    auto j = to_json(is_norm(k, x));
    j["x"] = x.to_string();
    j["field"] = k.describe();
    emit(j);
}

void run_norm(const NormOpts& o, bool membership) {
    const long prec = o.prec.value_or(default_precision());
    if (o.hahn) {
        const auto k = hahn_kummer(o.p, o.q, *o.hahn, prec);
        membership ? print_is_norm(k, o.x) : print_norm(k, o.element);
    } else {
        const auto k = laurent_kummer(o.p, o.q, prec);
        membership ? print_is_norm(k, o.x) : print_norm(k, o.element);
    }
}

// ---------------------------------------------------------------------------
// algebra

struct AlgebraOpts {
    std::uint64_t p = 7;
    unsigned q = 3;
    std::string alpha = "2";
    std::optional<long> prec;
    std::optional<std::uint64_t> hahn;
    std::optional<std::string> rational_t;  // Q(√t), q = 2
    std::string a, b;
    long target = 20;
    std::string out;
    std::uint64_t seed = 0;
};

template <class F>
void algebra_build(const CyclicAlgebra<F>& d) {
    Json j;
    j["algebra"] = d.describe();
    j["n"] = d.n();
    j["basis"] = d.labels();
    j["associative_unital"] = is_associative_unital(structure_constants(d));
    j["center_dimension"] = center_dimension(d);
    emit(j);
}

template <class F>
void algebra_certify(const CyclicAlgebra<F>& d) {
    if constexpr (!is_series_field_v<F>) {
        throw ConfigError("certification needs a valued base field; use --p or --hahn");
    } else {
        const auto c = is_division(d);
        Json j;
        j["algebra"] = d.describe();
        j["division"] = c.is_division;
        j["norm"] = to_json(c.norm);
        if (c.norm.preimage) {
            const auto& a = *c.norm.preimage;
            bool scalar = true;
            for (unsigned i = 1; i < d.q(); ++i) scalar = scalar && a[i].is_zero();
            const auto [l, r] = scalar ? zero_divisor_witness(d, a[0]) : norm_zero_divisor_witness(d, a);
            const auto prod = l * r;
            j["witness"] = {{"left", l.to_display()}, {"right", r.to_display()}, {"product_is_zero", prod.is_zero()}};
            if (!prod.is_zero()) throw InternalError("zero-divisor witness has a nonzero product");
        }
        emit(j);
    }
}

template <class F>
void algebra_mul(const CyclicAlgebra<F>& d, const AlgebraOpts& o) {
    const auto a = d.element(parse_coordinates(d.field(), o.a));
    const auto b = d.element(parse_coordinates(d.field(), o.b));
    const auto ab = a * b;
    const auto via_constants = constants_mul(a.coords(), b.coords(), structure_constants(d));
    Json j;
    j["product"] = ab.to_string();
    j["display"] = ab.to_display();
    j["constants_agree"] = vectors_equal_to_precision(via_constants, ab.coords());
    emit(j);
}

template <class F>
void algebra_invert(const CyclicAlgebra<F>& d, const AlgebraOpts& o) {
    const auto a = d.element(parse_coordinates(d.field(), o.a));
    try {
        const auto x = invert(a, Rational(o.target));
        Json j;
        j["inverse"] = x.to_string();
        j["display"] = x.to_display();
        emit(j);
    } catch (const ZeroDivisorError& e) {
        Json j;
        j["error"] = e.what();
        j["kernel"] = e.kernel();
        emit(j);
        throw Failure{};
    }
}

/// Writes the constants, then reloads the file and re-checks the product
/// against relation_mul on random exact pairs.
template <class F>
void algebra_constants(const CyclicAlgebra<F>& d, const AlgebraOpts& o) {
    if (o.out.empty()) throw ConfigError("--out is required");
    const auto s = structure_constants(d);
    write_json_file(o.out, constants_to_json(s));
    const auto loaded = constants_from_json(d.field(), read_json_file(o.out));
    bool ok = same_constants(s, loaded);
    Stream root = Stream(o.seed).split("export");
    std::size_t checked = 0;
    for (std::size_t i = 0; i < 50 && ok; ++i) {
        Stream st = root.split(i);
        auto draw = [&] {
            std::vector<typename F::element_type> c;
            for (std::size_t k = 0; k < d.n(); ++k) {
                if constexpr (is_series_field_v<F>) {
                    c.push_back(sample(d.field(), st, SeriesShape{-2, 2, 3, std::nullopt, 0.7}, false));
                } else {
                    c.push_back(sample(d.field(), st));
                }
            }
            return d.element(std::move(c));
        };
        const auto a = draw(), b = draw();
        ok = vectors_equal_to_precision(constants_mul(a.coords(), b.coords(), loaded), (a * b).coords());
        ++checked;
    }
    Json j;
    j["out"] = o.out;
    j["n"] = s.n();
    j["field"] = s.field().describe();
    j["round_trip"] = ok;
    j["pairs_checked"] = checked;
    emit(j);
    if (!ok) throw Failure{};
}

template <class F>
void algebra_dispatch(const std::string& cmd, const CyclicAlgebra<F>& d, const AlgebraOpts& o) {
    if (cmd == "build") algebra_build(d);
    else if (cmd == "certify") algebra_certify(d);
    else if (cmd == "mul") algebra_mul(d, o);
    else if (cmd == "invert") algebra_invert(d, o);
    else if (cmd == "constants") algebra_constants(d, o);
}

void run_algebra(const std::string& cmd, const AlgebraOpts& o) {
    const long prec = o.prec.value_or(default_precision());
    if (o.rational_t) {
        if (o.q != 2) throw ConfigError("--rational-t needs --q 2");
        const auto k = rational_quadratic(Rational::parse(*o.rational_t));
        algebra_dispatch(cmd, CyclicAlgebra<RationalField>(k, parse_element(RationalField{}, o.alpha)), o);
    } else if (o.hahn) {
        const auto k = hahn_kummer(o.p, o.q, *o.hahn, prec);
        algebra_dispatch(cmd, CyclicAlgebra<HahnTowerFp>(k, parse_element(k.field(), o.alpha)), o);
    } else {
        const auto k = laurent_kummer(o.p, o.q, prec);
        algebra_dispatch(cmd, CyclicAlgebra<LaurentFp>(k, parse_element(k.field(), o.alpha)), o);
    }
}

// ---------------------------------------------------------------------------
// albert, biquat

struct AlbertOpts {
    std::size_t trials = 1000;
    std::uint64_t seed = 0;
    bool extension = false;
    std::optional<long> prec;
    std::string out;
};

void run_albert(const AlbertOpts& o) {
    const auto f = laurent_q2(o.prec.value_or(default_precision()));
    const auto [d1, d2] = standard_biquaternion_factors(f);
    const auto phi = albert_form(d1, d2);
    Stream rng = Stream(o.seed).split(o.extension ? "form-over-K" : "form-over-F");
    const SeriesShape shape{-1, 1, 3, std::nullopt, 0.7};
    const auto start = std::chrono::steady_clock::now();
    AnisotropyReport r;
    if (o.extension) {
        const QuadraticExtension<LaurentQ2> k(f, nonsquare_witness(f).element);
        r = anisotropy_sample_test(phi, k, o.trials, rng, shape);
    } else {
        r = anisotropy_sample_test(phi, f, o.trials, rng, shape);
    }
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - start;
    auto j = to_json(r);
    j["form"] = phi.to_string();
    j["seed"] = o.seed;
    j["elapsed"] = dt.count();
    emit(j);
    if (!r.passed()) throw Failure{};
}

void run_biquat_constants(const AlbertOpts& o) {
    if (o.out.empty()) throw ConfigError("--out is required");
    const auto f = laurent_q2(o.prec.value_or(default_precision()));
    const auto [d1, d2] = standard_biquaternion_factors(f);
    const auto b = tensor_product(d1, d2);
    write_json_file(o.out, constants_to_json(b.constants()));
    const auto loaded = constants_from_json(f, read_json_file(o.out));
    const bool ok = same_constants(b.constants(), loaded) && is_associative_unital(loaded);
    Json j;
    j["out"] = o.out;
    j["n"] = loaded.n();
    j["factors"] = {d1.describe(), d2.describe()};
    j["round_trip"] = ok;
    emit(j);
    if (!ok) throw Failure{};
}

// ---------------------------------------------------------------------------
// verify

struct VerifyOpts {
    std::string config;
    std::optional<std::uint64_t> seed;
    std::optional<long> precision;
    std::optional<std::size_t> trials;
    std::vector<std::string> claims;
    std::vector<std::string> contexts;  // "p:q"
    bool timings = false;
    bool list = false;
    std::string out;
};

int run_verify(const VerifyOpts& o) {
    if (o.list) {
        for (const auto& id : claim_ids()) std::cout << id << '\n';
        return kPass;
    }
    SuiteConfig cfg;
    apply_environment(cfg);
    if (!o.config.empty()) apply_config_json(cfg, read_json_file(o.config));
    if (o.seed) cfg.seed = *o.seed;
    if (o.precision) cfg.precision = *o.precision;
    if (o.trials) cfg.trials = *o.trials;
    if (!o.claims.empty()) cfg.claims = o.claims;
    if (!o.contexts.empty()) {
        cfg.contexts.clear();
        for (const auto& pq : o.contexts) {
            const auto colon = pq.find(':');
            if (colon == std::string::npos) throw ConfigError("context must be p:q, got " + pq);
            try {
                cfg.contexts.emplace_back(std::stoull(pq.substr(0, colon)), static_cast<unsigned>(std::stoul(pq.substr(colon + 1))));
            } catch (const std::exception&) {
                throw ConfigError("context must be p:q, got " + pq);
            }
        }
    }
    cfg.timings = o.timings;
    validate(cfg);

    std::ofstream file;
    if (!o.out.empty()) {
        file.open(o.out);
        if (!file) throw Error("cannot open " + o.out + " for writing");
    }
    std::ostream& out = o.out.empty() ? std::cout : file;
    bool all = true;
    (void)run_suite(cfg, [&](const VerificationReport& r) {
        auto copy = r;
        if (!cfg.timings) copy.elapsed.reset();
        out << copy.to_json().dump() << '\n' << std::flush;
        all = all && r.passed();
        std::cerr << (r.passed() ? "PASS " : "FAIL ") << r.claim << '\n';
    });
    return all ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic division algebras over valued fields: norms, certification, Albert forms"};
    app.require_subcommand(1);

    AnagramOpts ao;
    auto* anagram_cmd = app.add_subcommand("anagram-table", "Anagram classes of F_q^q with level counts");
    anagram_cmd->add_option("--q", ao.q, "q in {2, 3, 5, 7}")->required();
    anagram_cmd->add_flag("--json", ao.json, "JSON output");

    NormOpts no;
    auto add_kummer_opts = [&](CLI::App* c) {
        c->add_option("--p", no.p, "residue characteristic");
        c->add_option("--q", no.q, "degree");
        c->add_option("--prec", no.prec, "absolute precision O(t^N)");
        c->add_option("--hahn", no.hahn, "use F_p((x^G))((t^G)) with G = Z[1/ELL]");
    };
    auto* norm_cmd = app.add_subcommand("norm", "Norm by conjugate product and by the anagram formula");
    add_kummer_opts(norm_cmd);
    norm_cmd->add_option("--element", no.element, "coordinates \"[b0; b1; ...]\"")->required();
    auto* is_norm_cmd = app.add_subcommand("is-norm", "Decide whether x is a norm from K");
    add_kummer_opts(is_norm_cmd);
    is_norm_cmd->add_option("--x", no.x, "series in F")->required();

    AlgebraOpts alg;
    std::string algebra_action;
    auto* algebra_cmd = app.add_subcommand("algebra", "Cyclic algebra (K/F, sigma, alpha)");
    algebra_cmd->require_subcommand(1);
    auto add_algebra_opts = [&](CLI::App* c) {
        c->add_option("--p", alg.p, "residue characteristic");
        c->add_option("--q", alg.q, "degree");
        c->add_option("--alpha", alg.alpha, "alpha in F");
        c->add_option("--prec", alg.prec, "absolute precision O(t^N)");
        c->add_option("--hahn", alg.hahn, "use F_p((x^G))((t^G)) with G = Z[1/ELL]");
        c->add_option("--rational-t", alg.rational_t, "use F = Q, K = Q(sqrt(T)), q = 2");
        c->callback([&, c] { algebra_action = c->get_name(); });
    };
    auto* build_cmd = algebra_cmd->add_subcommand("build", "Describe the algebra and its basis");
    add_algebra_opts(build_cmd);
    auto* certify_cmd = algebra_cmd->add_subcommand("certify", "Division certificate or zero-divisor witness");
    add_algebra_opts(certify_cmd);
    auto* mul_cmd = algebra_cmd->add_subcommand("mul", "Product of two elements");
    add_algebra_opts(mul_cmd);
    mul_cmd->add_option("--a", alg.a, "coordinates of a")->required();
    mul_cmd->add_option("--b", alg.b, "coordinates of b")->required();
    auto* invert_cmd = algebra_cmd->add_subcommand("invert", "Two-sided inverse to a target precision");
    add_algebra_opts(invert_cmd);
    invert_cmd->add_option("--a", alg.a, "coordinates of a")->required();
    invert_cmd->add_option("--target", alg.target, "target precision O(t^N)");
    auto* constants_cmd = algebra_cmd->add_subcommand("constants", "Export structure constants as JSON");
    add_algebra_opts(constants_cmd);
    constants_cmd->add_option("--out", alg.out, "output file")->required();
    constants_cmd->add_option("--seed", alg.seed, "seed for the re-check");

    AlbertOpts albert;
    auto* albert_cmd = app.add_subcommand("albert", "Sample the Albert form of (X,-1) (x) (-X,Y) for zeros");
    albert_cmd->add_option("--trials", albert.trials, "number of nonzero 6-tuples");
    albert_cmd->add_option("--seed", albert.seed, "seed");
    albert_cmd->add_option("--prec", albert.prec, "precision of the series fields");
    albert_cmd->add_flag("--extension", albert.extension, "sample over F(gamma), gamma^2 = 2 + 2X^2");
    auto* biquat_cmd = app.add_subcommand("biquat", "Biquaternion algebra (X,-1) (x) (-X,Y)");
    biquat_cmd->require_subcommand(1);
    auto* biquat_constants = biquat_cmd->add_subcommand("constants", "Export the 16-dimensional structure constants");
    biquat_constants->add_option("--out", albert.out, "output file")->required();

    VerifyOpts vo;
    auto* verify_cmd = app.add_subcommand("verify", "Run the verification suite; JSON lines on stdout");
    verify_cmd->add_option("--config", vo.config, "JSON config file");
    verify_cmd->add_option("--seed", vo.seed, "seed (default 0)");
    verify_cmd->add_option("--precision", vo.precision, "precision (default 20, or CDA_PRECISION)");
    verify_cmd->add_option("--trials", vo.trials, "override every randomized count");
    verify_cmd->add_option("--claim", vo.claims, "run only these claim ids");
    verify_cmd->add_option("--context", vo.contexts, "p:q contexts (default 7:3 13:3 11:5)");
    verify_cmd->add_flag("--timings", vo.timings, "include elapsed seconds");
    verify_cmd->add_flag("--list", vo.list, "list claim ids");
    verify_cmd->add_option("--out", vo.out, "write reports to a file");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kPass : kUsage;
    }

    try {
        if (anagram_cmd->parsed()) run_anagram_table(ao);
        else if (norm_cmd->parsed()) run_norm(no, false);
        else if (is_norm_cmd->parsed()) run_norm(no, true);
        else if (algebra_cmd->parsed()) run_algebra(algebra_action, alg);
        else if (albert_cmd->parsed()) run_albert(albert);
        else if (biquat_cmd->parsed()) run_biquat_constants(albert);
        else if (verify_cmd->parsed()) return run_verify(vo);
        return kPass;
    } catch (const Failure& f) {
        return f.code;
    } catch (const InternalError& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kFail;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
}
