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

// linfield — exact computer algebra for linearized polynomials over finite
// field towers, driven by JSON documents.
//
// Exit codes: 0 success, 1 domain error (the payload names the failing
// precondition), 2 malformed input.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "linfield/linfield.hpp"
#include "linfield/selftest.hpp"
#include "linfield/serialize.hpp"

namespace {

using linfield::io::json;

struct Cli {
    std::string field_path;
    std::string poly;
    std::string poly2;
    std::string basis;
    std::string elem;
    std::uint32_t m = 1;
    bool m_set = false;
    int form = 3;
    int indent = -1;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw linfield::io::ParseError("cannot open file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

/// Operand values are inline JSON, @file indirection, or a bare name.
json operand_json(const std::string& text) {
    if (!text.empty() && text[0] == '@') return json::parse(slurp(text.substr(1)));
    if (!text.empty() && (text[0] == '{' || text[0] == '[' || text[0] == '"')) return json::parse(text);
    return json(text);  // bare name, resolved against the field file
}

void emit(const json& doc, int indent) {
    if (indent >= 0)
        std::cout << doc.dump(indent) << '\n';
    else
        std::cout << doc.dump() << '\n';
}

int run_command(const std::string& cmd, const Cli& args) {
    using namespace linfield;
    io::FieldFile ff = io::field_file_from_json(json::parse(slurp(args.field_path)));
    const FieldTower& t = ff.tower;
    const io::NameTable* names = &ff.names;

    auto need_poly = [&](std::size_t i) {
        const std::string& text = i == 0 ? args.poly : args.poly2;
        if (text.empty()) throw io::ParseError(i == 0 ? "command requires --poly" : "command requires --poly2");
        return io::linpoly_from_json(t, operand_json(text), names);
    };
    auto need_basis = [&]() {
        if (args.basis.empty()) {
            std::vector<FqnElem> b;
            for (std::uint32_t i = 0; i < t.n(); ++i) b.push_back(t.monomial(i));
            return b;
        }
        return io::elems_from_json(t, operand_json(args.basis), names);
    };

    json out;
    if (cmd == "eval") {
        if (args.elem.empty()) throw io::ParseError("eval requires --elem");
        LinPoly L = need_poly(0);
        out["value"] = io::elem_to_json(L.evaluate(io::elem_from_json(t, operand_json(args.elem), names)));
    } else if (cmd == "compose") {
        out = io::linpoly_to_json(need_poly(0).compose(need_poly(1)));
    } else if (cmd == "rank") {
        out["rank"] = DicksonMatrix::from_poly(need_poly(0)).rank();
    } else if (cmd == "det") {
        out["det"] = io::elem_to_json(DicksonMatrix::from_poly(need_poly(0)).determinant());
    } else if (cmd == "invert") {
        out = io::linpoly_to_json(inverse_poly(need_poly(0)));
    } else if (cmd == "adjugate") {
        out = io::linpoly_to_json(adjugate_poly(need_poly(0)));
    } else if (cmd == "kernel") {
        out["kernel"] = io::elems_to_json(kernel_basis(need_poly(0)));
    } else if (cmd == "image") {
        out["image"] = io::elems_to_json(image_basis(need_poly(0)));
    } else if (cmd == "trace-rep") {
        LinPoly L = need_poly(0);
        auto basis = need_basis();
        TraceForm tf = args.form == 1   ? to_trace_form_dualside(L, basis)
                       : args.form == 2 ? to_trace_form_full(L, basis)
                                        : compact_form(L);
        out = io::traceform_to_json(tf);
    } else if (cmd == "factor") {
        FactorChain fc = factor_chain(need_poly(0));
        out["permutation"] = io::linpoly_to_json(fc.permutation);
        out["gammas"] = io::elems_to_json(fc.gammas);
    } else if (cmd == "skew-gcd") {
        if (args.poly.empty() || args.poly2.empty()) throw io::ParseError("skew-gcd requires --poly and --poly2");
        SkewPoly a = io::skew_from_json(t, operand_json(args.poly), names);
        SkewPoly b = io::skew_from_json(t, operand_json(args.poly2), names);
        out = io::skew_to_json(rgcd(a, b));
    } else if (cmd == "dual-basis") {
        out["basis"] = io::elems_to_json(dual_basis(t, need_basis()));
    } else if (cmd == "subfield-check") {
        if (!args.m_set) throw io::ParseError("subfield-check requires --m");
        LinPoly L = need_poly(0);
        bool sub = is_subfield_poly(L, args.m);
        out["subfield"] = sub;
        SubfieldContext ctx = SubfieldContext::make(t, args.m);
        out["beta"] = io::elem_to_json(ctx.beta);
        out["alpha_pattern"] = alpha_pattern_holds(L, ctx);
        auto b = b_matrix(L, ctx);
        out["block_circulant"] = is_block_circulant(b, ctx.t, ctx.m);
    } else if (cmd == "matrix-rep") {
        out["matrix"] = io::matfq_to_json(matrix_rep(need_poly(0), need_basis()));
    } else {
        throw io::ParseError("unknown command '" + cmd + "'");
    }
    emit(out, args.indent);
    return 0;
}

int run_selftest(int indent) {
    auto results = linfield::selftest::run_selftest(&std::cerr);
    json laws = json::array();
    int failed = 0;
    for (const auto& r : results) {
        json l;
        l["name"] = r.name;
        l["criterion"] = r.criterion;
        l["ok"] = r.ok;
        if (!r.ok) {
            l["detail"] = r.detail;
            ++failed;
        }
        laws.push_back(l);
    }
    json out;
    out["laws"] = laws;
    out["passed"] = results.size() - failed;
    out["failed"] = failed;
    emit(out, indent);
    return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computer algebra for linearized polynomials over finite fields"};
    app.require_subcommand(1);

    Cli args;
    const std::vector<std::string> commands = {"eval",   "compose",  "rank",       "det",        "invert",
                                               "adjugate", "kernel", "image",      "trace-rep",  "factor",
                                               "skew-gcd", "dual-basis", "subfield-check", "matrix-rep"};
    for (const auto& name : commands) {
        auto* sub = app.add_subcommand(name);
        sub->add_option("--field", args.field_path, "field description file (JSON)")->required();
        sub->add_option("--poly", args.poly, "polynomial operand: JSON, @file or name");
        sub->add_option("--poly2", args.poly2, "second polynomial operand (compose, skew-gcd)");
        sub->add_option("--basis", args.basis, "basis operand: JSON array of elements");
        sub->add_option("--elem", args.elem, "element operand (eval)");
        sub->add_option("--m", args.m, "subfield degree divisor")->each([&](const std::string&) { args.m_set = true; });
        sub->add_option("--form", args.form, "trace representation form (1, 2 or 3)")->check(CLI::Range(1, 3));
        sub->add_option("--json-indent", args.indent, "pretty-print output with this indent");
    }
    auto* selftest = app.add_subcommand("selftest", "run the built-in law suite");
    selftest->add_option("--json-indent", args.indent, "pretty-print output with this indent");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        json err;
        err["error"] = "MalformedInput";
        err["detail"] = e.what();
        std::cout << err.dump() << '\n';
        std::cerr << e.what() << '\n';
        return 2;
    }

    try {
        if (selftest->parsed()) return run_selftest(args.indent);
        for (const auto& name : commands)
            if (app.get_subcommand(name)->parsed()) return run_command(name, args);
        return 2;
    } catch (const linfield::Error& e) {
        json err;
        err["error"] = e.name();
        err["detail"] = e.what();
        std::cout << err.dump() << '\n';
        std::cerr << e.what() << '\n';
        return 1;
    } catch (const linfield::io::ParseError& e) {
        json err;
        err["error"] = "MalformedInput";
        err["detail"] = e.what();
        std::cout << err.dump() << '\n';
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const json::exception& e) {
        json err;
        err["error"] = "MalformedInput";
        err["detail"] = e.what();
        std::cout << err.dump() << '\n';
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        json err;
        err["error"] = "InternalError";
        err["detail"] = e.what();
        std::cout << err.dump() << '\n';
        std::cerr << e.what() << '\n';
        return 1;
    }
}
