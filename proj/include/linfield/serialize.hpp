/*
   Copyright 2026 The linfield authors

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
 * @file serialize.hpp
 * @brief JSON formats shared by the CLI and the golden-file tests.
 *
 * Field description:  {"p": 2, "f": [1,1,1], "g": [[1],[1],[1]]}
 *   with optional "consts" (named elements) and "polys" (named
 *   polynomials). f holds little-endian GF(p) coefficients; g holds GF(q)
 *   elements, each a little-endian GF(p) coefficient array.
 *
 * Elements serialize as nested little-endian arrays of integers. On input,
 * a GF(q) coefficient may also be a string of decimal digits ("01" = u),
 * and a whole element may be the name of a constant from the field file.
 *
 * Polynomials: {"coeffs": [elem, …]}; input longer than n is reduced by
 * folding exponents modulo n at parse time. Skew polynomials:
 * {"skew": [elem, …]}. Trace forms: {"pairs": [[ω, θ], …]}. Matrices are
 * row-major nested arrays; Dickson matrices serialize by first row with a
 * "dickson": true tag.
 */

#ifndef LINFIELD_SERIALIZE_HPP
#define LINFIELD_SERIALIZE_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "dickson.hpp"
#include "moore.hpp"
#include "skew.hpp"

namespace linfield {
namespace io {

using json = nlohmann::json;

/// Malformed input (as opposed to a domain Error).
struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct NameTable {
    std::map<std::string, FqnElem> consts;
    std::map<std::string, std::vector<FqnElem>> polys;
};

// ---- elements ----

inline json fq_to_json(const FqElem& c) {
    json a = json::array();
    for (auto x : c) a.push_back(x);
    return a;
}

inline json elem_to_json(const FqnElem& a) {
    json r = json::array();
    for (const auto& c : a) r.push_back(fq_to_json(c));
    return r;
}

inline FqElem fq_from_json(const FieldTower& t, const json& j) {
    FqElem c;
    if (j.is_string()) {
        for (char ch : j.get<std::string>()) {
            if (ch < '0' || ch > '9') throw ParseError("bad digit '" + std::string(1, ch) + "' in GF(q) coefficient string");
            c.push_back(std::uint32_t(ch - '0'));
        }
    } else if (j.is_number_unsigned() || j.is_number_integer()) {
        long long v = j.get<long long>();
        if (v < 0) throw ParseError("negative GF(p) coefficient");
        c.push_back(std::uint32_t(v));
    } else if (j.is_array()) {
        for (const auto& x : j) {
            if (!x.is_number_integer() && !x.is_number_unsigned()) throw ParseError("GF(q) coefficient entries must be integers");
            long long v = x.get<long long>();
            if (v < 0) throw ParseError("negative GF(p) coefficient");
            c.push_back(std::uint32_t(v));
        }
    } else {
        throw ParseError("GF(q) coefficient must be an array, digit string or integer");
    }
    if (c.size() > t.e()) throw ParseError("GF(q) coefficient has more than e entries");
    c.resize(t.e(), 0);
    for (auto& x : c) x %= t.p();
    return c;
}

inline FqnElem elem_from_json(const FieldTower& t, const json& j, const NameTable* names = nullptr) {
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (names) {
            auto it = names->consts.find(name);
            if (it != names->consts.end()) return it->second;
        }
        throw ParseError("unknown element constant '" + name + "'");
    }
    if (!j.is_array()) throw ParseError("element must be an array of GF(q) coefficients");
    FqnElem a;
    for (const auto& c : j) a.push_back(fq_from_json(t, c));
    if (a.size() > t.n()) throw ParseError("element has more than n coefficients");
    a.resize(t.n(), t.q_zero());
    return a;
}

inline std::vector<FqnElem> elems_from_json(const FieldTower& t, const json& j, const NameTable* names = nullptr) {
    if (!j.is_array()) throw ParseError("expected an array of elements");
    std::vector<FqnElem> r;
    for (const auto& x : j) r.push_back(elem_from_json(t, x, names));
    return r;
}

inline json elems_to_json(const std::vector<FqnElem>& v) {
    json r = json::array();
    for (const auto& a : v) r.push_back(elem_to_json(a));
    return r;
}

// ---- polynomials ----

/// Accepts {"coeffs": [...]} or a bare array; folds exponents modulo n and
/// pads to n coefficients.
inline LinPoly linpoly_from_json(const FieldTower& t, const json& j, const NameTable* names = nullptr) {
    json arr;
    if (j.is_string()) {
        const auto name = j.get<std::string>();
        if (name == "identity") return LinPoly::identity(t);
        if (name == "zero") return LinPoly::zero(t);
        if (names) {
            auto it = names->polys.find(name);
            if (it != names->polys.end()) return LinPoly(t, it->second);
        }
        throw ParseError("unknown polynomial name '" + name + "'");
    }
    if (j.is_object()) {
        if (!j.contains("coeffs")) throw ParseError("polynomial object must contain \"coeffs\"");
        arr = j.at("coeffs");
    } else {
        arr = j;
    }
    if (!arr.is_array()) throw ParseError("polynomial coefficients must be an array");
    std::vector<FqnElem> folded(t.n(), t.zero());
    std::size_t i = 0;
    for (const auto& c : arr) {
        folded[i % t.n()] = t.add(folded[i % t.n()], elem_from_json(t, c, names));
        ++i;
    }
    return LinPoly(t, std::move(folded));
}

inline json linpoly_to_json(const LinPoly& L) {
    json r;
    r["coeffs"] = elems_to_json(L.coeffs());
    return r;
}

inline SkewPoly skew_from_json(const FieldTower& t, const json& j, const NameTable* names = nullptr) {
    json arr = j.is_object() ? (j.contains("skew") ? j.at("skew") : throw ParseError("skew object must contain \"skew\"")) : j;
    if (!arr.is_array()) throw ParseError("skew coefficients must be an array");
    std::vector<FqnElem> c;
    for (const auto& x : arr) c.push_back(elem_from_json(t, x, names));
    return SkewPoly(t, std::move(c));
}

inline json skew_to_json(const SkewPoly& s) {
    json r;
    r["skew"] = elems_to_json(s.coeffs());
    return r;
}

inline TraceForm traceform_from_json(const FieldTower& t, const json& j, const NameTable* names = nullptr) {
    json arr = j.is_object() ? (j.contains("pairs") ? j.at("pairs") : throw ParseError("trace form object must contain \"pairs\"")) : j;
    if (!arr.is_array()) throw ParseError("trace form pairs must be an array");
    std::vector<TraceForm::Pair> pairs;
    for (const auto& p : arr) {
        if (!p.is_array() || p.size() != 2) throw ParseError("each trace form pair must be a two-element array");
        pairs.emplace_back(elem_from_json(t, p[0], names), elem_from_json(t, p[1], names));
    }
    return TraceForm(t, std::move(pairs));
}

inline json traceform_to_json(const TraceForm& tf) {
    json arr = json::array();
    for (const auto& [w, th] : tf.pairs()) arr.push_back(json::array({elem_to_json(w), elem_to_json(th)}));
    json r;
    r["pairs"] = arr;
    return r;
}

// ---- matrices ----

inline json matfq_to_json(const MatFq& m) {
    json r = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(fq_to_json(m.at(i, j)));
        r.push_back(row);
    }
    return r;
}

inline json matfqn_to_json(const MatFqn& m) {
    json r = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(elem_to_json(m.at(i, j)));
        r.push_back(row);
    }
    return r;
}

inline json dickson_to_json(const DicksonMatrix& d) {
    json r;
    r["dickson"] = true;
    r["first_row"] = elems_to_json(d.first_row());
    return r;
}

inline DicksonMatrix dickson_from_json(const FieldTower& t, const json& j, const NameTable* names = nullptr) {
    if (j.is_object() && j.value("dickson", false))
        return DicksonMatrix(t, elems_from_json(t, j.at("first_row"), names));
    // full row-major matrix; structure verified
    if (!j.is_array()) throw ParseError("Dickson matrix must be tagged or a full row-major matrix");
    MatFqn m(FqnOps{t}, j.size(), j.size());
    for (std::size_t i = 0; i < j.size(); ++i) {
        if (!j[i].is_array() || j[i].size() != j.size()) throw ParseError("matrix is not square");
        for (std::size_t c = 0; c < j.size(); ++c) m.at(i, c) = elem_from_json(t, j[i][c], names);
    }
    return DicksonMatrix::from_full(m);
}

// ---- field description files ----

inline FieldTower tower_from_json(const json& j) {
    if (!j.is_object() || !j.contains("p") || !j.contains("f") || !j.contains("g"))
        throw ParseError("field description requires \"p\", \"f\" and \"g\"");
    if (!j.at("p").is_number_unsigned()) throw ParseError("p must be a nonnegative integer");
    std::uint32_t p = j.at("p").get<std::uint32_t>();
    if (!j.at("f").is_array()) throw ParseError("f must be an array");
    std::vector<std::uint32_t> f;
    for (const auto& x : j.at("f")) {
        if (!x.is_number_unsigned()) throw ParseError("f entries must be nonnegative integers");
        f.push_back(x.get<std::uint32_t>());
    }
    if (!j.at("g").is_array()) throw ParseError("g must be an array");
    // g entries are GF(q) elements; e is deg f, known before tower construction
    if (f.empty()) throw ParseError("f must be nonempty");
    std::vector<FqElem> g;
    for (const auto& c : j.at("g")) {
        FqElem v;
        if (c.is_string()) {
            for (char ch : c.get<std::string>()) {
                if (ch < '0' || ch > '9') throw ParseError("bad digit in g coefficient string");
                v.push_back(std::uint32_t(ch - '0'));
            }
        } else if (c.is_number_unsigned()) {
            v.push_back(c.get<std::uint32_t>());
        } else if (c.is_array()) {
            for (const auto& x : c) {
                if (!x.is_number_unsigned()) throw ParseError("g coefficient entries must be nonnegative integers");
                v.push_back(x.get<std::uint32_t>());
            }
        } else {
            throw ParseError("g coefficients must be arrays, digit strings or integers");
        }
        g.push_back(std::move(v));
    }
    return FieldTower(p, std::move(f), std::move(g));
}

inline json tower_to_json(const FieldTower& t) {
    json r;
    r["p"] = t.p();
    r["f"] = json::array();
    for (auto x : t.f()) r["f"].push_back(x);
    r["g"] = json::array();
    for (const auto& c : t.g()) r["g"].push_back(fq_to_json(c));
    return r;
}

struct FieldFile {
    FieldTower tower;
    NameTable names;
};

inline FieldFile field_file_from_json(const json& j) {
    FieldFile ff{tower_from_json(j), {}};
    if (j.contains("consts")) {
        if (!j.at("consts").is_object()) throw ParseError("consts must be an object");
        for (const auto& [name, val] : j.at("consts").items())
            ff.names.consts.emplace(name, elem_from_json(ff.tower, val));
    }
    if (j.contains("polys")) {
        if (!j.at("polys").is_object()) throw ParseError("polys must be an object");
        for (const auto& [name, val] : j.at("polys").items())
            ff.names.polys.emplace(name, linpoly_from_json(ff.tower, val, &ff.names).coeffs());
    }
    return ff;
}

}  // namespace io
}  // namespace linfield

#endif
