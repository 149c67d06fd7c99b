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

// JSON serialization (nlohmann/json, vendored).
//
// Structure constants:
//   {"n": 4, "field": "Q", "basis": ["1", "u", ...],
//    "matrices": [M_1, ..., M_n]}   with M_k[i][j] the coefficient string
// Coefficients use the series text format, so loading re-parses them in the
// field named by the descriptor.

#pragma once

#include <cstdint>
#include <fstream>
#include <string>
#include <utility>
#include <vector>

#include "cda/albert.hpp"
#include "cda/anagram.hpp"
#include "cda/error.hpp"
#include "cda/kummer.hpp"
#include "cda/structure_constants.hpp"
#include "cda/text_format.hpp"
#include "json.hpp"

namespace cda {

using Json = nlohmann::ordered_json;

template <class F>
[[nodiscard]] Json constants_to_json(const StructureConstants<F>& s) {
    Json matrices = Json::array();
    for (std::size_t k = 0; k < s.n(); ++k) {
        Json m = Json::array();
        for (const auto& row : s.matrix(k)) {
            Json r = Json::array();
            for (const auto& x : row) r.push_back(x.to_string());
            m.push_back(std::move(r));
        }
        matrices.push_back(std::move(m));
    }
    Json j;
    j["n"] = s.n();
    j["field"] = s.field().describe();
    j["basis"] = s.basis();
    j["matrices"] = std::move(matrices);
    return j;
}

/// Loads a constants file into `field`; the descriptor must match.
template <class F>
[[nodiscard]] StructureConstants<F> constants_from_json(const F& field, const Json& j) {
    try {
        const auto n = j.at("n").get<std::size_t>();
        const auto desc = j.at("field").get<std::string>();
        if (desc != field.describe()) throw Error("constants are over " + desc + ", expected " + field.describe());
        auto basis = j.at("basis").get<std::vector<std::string>>();
        if (basis.size() != n) throw Error("basis has " + std::to_string(basis.size()) + " labels, expected " + std::to_string(n));
        const auto& ms = j.at("matrices");
        if (!ms.is_array() || ms.size() != n) throw Error("expected " + std::to_string(n) + " structure matrices");
        std::vector<Matrix<typename F::element_type>> matrices;
        for (const auto& m : ms) {
            if (!m.is_array() || m.size() != n) throw Error("structure matrix has the wrong size");
            Matrix<typename F::element_type> mat;
            for (const auto& row : m) {
                if (!row.is_array() || row.size() != n) throw Error("structure matrix has the wrong size");
                std::vector<typename F::element_type> r;
                for (const auto& x : row) r.push_back(parse_element(field, x.get<std::string>()));
                mat.push_back(std::move(r));
            }
            matrices.push_back(std::move(mat));
        }
        return StructureConstants<F>(field, std::move(basis), matrices);
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("malformed constants file: ") + e.what());
    }
}

/// Same table (basis labels and every λ_k^{ij}).
template <class F>
[[nodiscard]] bool same_constants(const StructureConstants<F>& a, const StructureConstants<F>& b) {
    if (a.n() != b.n() || a.basis() != b.basis()) return false;
    for (std::size_t i = 0; i < a.n(); ++i) {
        for (std::size_t j = 0; j < a.n(); ++j) {
            const auto& x = a.product(i, j);
            const auto& y = b.product(i, j);
            if (x.size() != y.size()) return false;
            for (std::size_t k = 0; k < x.size(); ++k) {
                if (x[k].first != y[k].first || x[k].second.to_string() != y[k].second.to_string()) return false;
            }
        }
    }
    return true;
}

inline void write_json_file(const std::string& path, const Json& j) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
    if (!out) throw Error("write to " + path + " failed");
}

[[nodiscard]] inline Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw Error(path + ": " + e.what());
    }
}

template <class F>
[[nodiscard]] std::string reason_name(typename NormDecision<F>::Reason r) {
    switch (r) {
        case NormDecision<F>::Reason::Preimage: return "preimage";
        case NormDecision<F>::Reason::ResidueNotQthPower: return "residue-not-qth-power";
        case NormDecision<F>::Reason::ValuationOutsideCosets: return "valuation-outside-cosets";
    }
    return "unknown";
}

/// {verdict, certificate, preimage?}
template <class F>
[[nodiscard]] Json to_json(const NormDecision<F>& d) {
    Json cert;
    cert["kind"] = reason_name<F>(d.reason);
    cert["valuation"] = d.valuation.to_string();
    cert["coset_index"] = d.coset_index;
    if (d.residue) cert["residue"] = d.residue->to_string();
    Json j;
    j["verdict"] = d.is_norm ? "norm" : "not-norm";
    j["certificate"] = std::move(cert);
    if (d.preimage) j["preimage"] = d.preimage->to_string();
    return j;
}

[[nodiscard]] inline Json to_json(const ResidueOfNormsReport& r) {
    Json pre = Json::object();
    for (const auto& [y, a] : r.preimages) pre[std::to_string(y)] = a;
    Json j;
    j["p"] = r.p;
    j["q"] = r.q;
    j["qth_powers"] = r.qth_powers;
    j["observed"] = r.observed;
    j["samples"] = r.samples;
    j["zero_residues"] = r.zero_residues;
    j["outside"] = r.outside;
    j["preimages"] = std::move(pre);
    j["surjective"] = r.surjective;
    return j;
}

[[nodiscard]] inline Json to_json(const AnisotropyReport& r) {
    Json j;
    j["trials"] = r.trials;
    j["failures"] = r.failures;
    j["counterexamples"] = r.counterexamples;
    j["extension"] = r.extension.empty() ? Json(nullptr) : Json(r.extension);
    return j;
}

[[nodiscard]] inline Json to_json(const anagram::AnagramClass& c) {
    Json j;
    j["representative"] = anagram::tuple_to_string(c.rep);
    j["multiplicities"] = c.multiplicities;
    j["class_size"] = c.class_size;
    j["levels"] = c.level_counts;
    j["f"] = c.coefficient();
    j["in_c0"] = c.in_c0();
    return j;
}

}  // namespace cda
