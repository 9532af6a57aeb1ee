// Command-line front end: parsing, evaluation, decision procedures,
// translations, and the polyhedral duality operations.
//
// Exit codes: 0 property holds / 1 property fails / 2 usage or parse
// error / 3 cell budget exceeded.

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <dmv/dmv.hpp>

namespace {

using namespace dmv;

enum class Lang { Auto, Ql, RatLuk };

struct ParsedFormula {
    std::optional<Formula::Ptr> ql;
    std::optional<DFormula::Ptr> ratluk;

    std::size_t dimension() const { return ql ? (*ql)->dimension() : (*ratluk)->dimension(); }
    PwlFunc compile(std::size_t dim) const {
        return ql ? compile_ql(**ql, dim) : compile_ratluk(**ratluk, dim);
    }
    PwlFunc compile() const { return ql ? compile_ql(*ql) : compile_ratluk(*ratluk); }
    std::string reprint() const { return ql ? print(*ql) : print(*ratluk); }
};

Lang parse_lang(const std::string& s) {
    if (s == "ql") return Lang::Ql;
    if (s == "ratluk") return Lang::RatLuk;
    if (s.empty() || s == "auto") return Lang::Auto;
    throw ParseError("unknown language '" + s + "' (expected ql or ratluk)");
}

ParsedFormula parse_formula(const std::string& text, Lang lang) {
    switch (lang) {
        case Lang::Ql: return {parse_ql(text), std::nullopt};
        case Lang::RatLuk: return {std::nullopt, parse_ratluk(text)};
        case Lang::Auto:
            try {
                return {parse_ql(text), std::nullopt};
            } catch (const ParseError&) {
                return {std::nullopt, parse_ratluk(text)};
            }
    }
    throw std::logic_error("unreachable");
}

Valuation parse_point(const std::string& csv) {
    Valuation v;
    std::istringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        std::size_t a = item.find_first_not_of(" \t");
        std::size_t b = item.find_last_not_of(" \t");
        if (a == std::string::npos) throw ParseError("empty coordinate in point");
        v.push_back(parse_unit_rational(item.substr(a, b - a + 1)));
    }
    return v;
}

std::string witness_text(const Valuation& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ", ";
        os << 'x' << i << '=' << v[i];
    }
    return os.str();
}

json witness_json(const Valuation& v) {
    json a = json::array();
    for (const auto& c : v) a.push_back(to_string(c));
    return a;
}

int report_verdict(const std::string& kind, const Verdict& verdict, bool as_json) {
    if (as_json) {
        json j{{"query", kind}, {"answer", verdict.answer}};
        if (verdict.witness) j["witness"] = witness_json(*verdict.witness);
        std::cout << j.dump() << "\n";
    } else {
        std::cout << kind << ": " << (verdict.answer ? "yes" : "no");
        if (verdict.witness) std::cout << "  witness: " << witness_text(*verdict.witness);
        std::cout << "\n";
    }
    return verdict.answer ? 0 : 1;
}

int report_bool(const std::string& kind, bool answer, bool as_json) {
    if (as_json)
        std::cout << json{{"query", kind}, {"answer", answer}}.dump() << "\n";
    else
        std::cout << kind << ": " << (answer ? "yes" : "no") << "\n";
    return answer ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact engine for Rational Lukasiewicz logic and DMV-algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    bool as_json = false;
    std::size_t max_cells = cell_budget();
    std::uint64_t seed = 0;
    app.add_flag("--json", as_json, "machine-readable output");
    app.add_option("--max-cells", max_cells, "cell budget for the pwl engine");
    app.add_option("--seed", seed, "seed for randomized helpers");

    std::string lang_name, formula_text, formula_b, at_point, to_lang;
    std::string file_out, file_f, file_g, map1, map2, presentation_text;

    auto add_lang = [&](CLI::App* cmd) {
        cmd->add_option("--lang", lang_name, "ql | ratluk (default: auto-detect)");
    };

    auto* cmd_eval = app.add_subcommand("eval", "evaluate a formula at a rational point");
    add_lang(cmd_eval);
    cmd_eval->add_option("--at", at_point, "comma-separated rational coordinates")->required();
    cmd_eval->add_option("formula", formula_text)->required();

    auto* cmd_taut = app.add_subcommand("taut", "decide tautology over [0,1] rationals");
    add_lang(cmd_taut);
    cmd_taut->add_option("formula", formula_text)->required();

    auto* cmd_sat = app.add_subcommand("sat", "decide satisfiability (some point of value 1)");
    add_lang(cmd_sat);
    cmd_sat->add_option("formula", formula_text)->required();

    auto* cmd_equiv = app.add_subcommand("equiv", "decide semantic equivalence of two formulas");
    add_lang(cmd_equiv);
    cmd_equiv->add_option("formula", formula_text)->required();
    cmd_equiv->add_option("formula_b", formula_b)->required();

    auto* cmd_translate = app.add_subcommand("translate", "translate between the two languages");
    cmd_translate->add_option("--to", to_lang, "target language: ql | ratluk")->required();
    cmd_translate->add_option("formula", formula_text)->required();

    auto* cmd_zeroset = app.add_subcommand("zeroset", "write the zeroset polyhedron of a formula");
    add_lang(cmd_zeroset);
    cmd_zeroset->add_option("-o,--output", file_out, "output file")->required();
    cmd_zeroset->add_option("formula", formula_text)->required();

    auto* cmd_ideal = app.add_subcommand("ideal-member", "decide g ∈ (f]");
    add_lang(cmd_ideal);
    cmd_ideal->add_option("-f", file_f, "generator formula f")->required();
    cmd_ideal->add_option("-g", file_g, "candidate formula g")->required();

    auto* cmd_approx = app.add_subcommand("mv-approx",
                                          "integer-coefficient generator with the same ideal");
    add_lang(cmd_approx);
    cmd_approx->add_option("formula", formula_text)->required();

    auto* cmd_compose = app.add_subcommand("compose", "compose two Q-map files");
    cmd_compose->add_option("-m", map1, "outer map sigma")->required();
    cmd_compose->add_option("-n", map2, "inner map lambda")->required();
    cmd_compose->add_option("-o,--output", file_out, "output file")->required();

    auto* cmd_dual = app.add_subcommand("dual", "apply the duality functor: formula ∘ map");
    add_lang(cmd_dual);
    cmd_dual->add_option("-m", map1, "Q-map file")->required();
    cmd_dual->add_option("formula", formula_text)->required();

    auto* cmd_quot = app.add_subcommand("quotient-eq",
                                        "equality of two formulas modulo a presentation ideal");
    add_lang(cmd_quot);
    cmd_quot->add_option("-p,--presentation", presentation_text, "generator formula")->required();
    cmd_quot->add_option("formula", formula_text)->required();
    cmd_quot->add_option("formula_b", formula_b)->required();

    CLI11_PARSE(app, argc, argv);

    using namespace dmv;
    set_cell_budget(max_cells);

    try {
        Lang lang = parse_lang(lang_name);

        if (*cmd_eval) {
            ParsedFormula phi = parse_formula(formula_text, lang);
            Valuation v = parse_point(at_point);
            UnitRational val = phi.ql ? eval_ql(*phi.ql, v) : eval_ratluk(*phi.ratluk, v);
            if (as_json)
                std::cout << json{{"value", to_string(val)}}.dump() << "\n";
            else
                std::cout << val << "\n";
            return 0;
        }
        if (*cmd_taut) {
            ParsedFormula phi = parse_formula(formula_text, lang);
            Verdict v = phi.ql ? is_tautology(*phi.ql) : is_tautology(*phi.ratluk);
            return report_verdict("tautology", v, as_json);
        }
        if (*cmd_sat) {
            ParsedFormula phi = parse_formula(formula_text, lang);
            Verdict v = phi.ql ? is_satisfiable(*phi.ql) : is_satisfiable(*phi.ratluk);
            return report_verdict("satisfiable", v, as_json);
        }
        if (*cmd_equiv) {
            ParsedFormula a = parse_formula(formula_text, lang);
            Verdict v = a.ql ? equivalent(*a.ql, parse_ql(formula_b))
                             : equivalent(*a.ratluk, parse_ratluk(formula_b));
            return report_verdict("equivalent", v, as_json);
        }
        if (*cmd_translate) {
            std::string out;
            if (to_lang == "ql")
                out = print(translate_i1(parse_ratluk(formula_text)));
            else if (to_lang == "ratluk")
                out = print(translate_i2(parse_ql(formula_text)));
            else
                throw ParseError("--to expects ql or ratluk");
            if (as_json)
                std::cout << json{{"formula", out}}.dump() << "\n";
            else
                std::cout << out << "\n";
            return 0;
        }
        if (*cmd_zeroset) {
            RatPolyhedron z = zeroset(parse_formula(formula_text, lang).compile());
            save_json_file(file_out, polyhedron_to_json(z));
            if (!as_json) std::cout << "wrote " << file_out << " (" << z.pieces().size() << " pieces)\n";
            return 0;
        }
        if (*cmd_ideal) {
            ParsedFormula f = parse_formula(file_f, lang);
            ParsedFormula g = parse_formula(file_g, lang);
            std::size_t d = std::max(f.dimension(), g.dimension());
            if (d == 0) d = 1;
            return report_bool("ideal-member", ideal_member(g.compile(d), f.compile(d)), as_json);
        }
        if (*cmd_approx) {
            PwlFunc b = mv_approximant(parse_formula(formula_text, lang).compile());
            std::cout << pwl_to_json(b).dump(as_json ? -1 : 2) << "\n";
            return 0;
        }
        if (*cmd_compose) {
            QMap sigma = qmap_from_json(load_json_file(map1));
            QMap lambda = qmap_from_json(load_json_file(map2));
            QMap composed = qmap_compose(sigma, lambda);
            save_json_file(file_out, qmap_to_json(composed));
            if (!as_json) std::cout << "wrote " << file_out << "\n";
            return 0;
        }
        if (*cmd_dual) {
            QMap map = qmap_from_json(load_json_file(map1));
            ParsedFormula f = parse_formula(formula_text, lang);
            PwlFunc pulled = pwl_compose(f.compile(map.target_dim()), map.components);
            std::cout << pwl_to_json(pulled).dump(as_json ? -1 : 2) << "\n";
            return 0;
        }
        if (*cmd_quot) {
            ParsedFormula gen = parse_formula(presentation_text, lang);
            ParsedFormula a = parse_formula(formula_text, lang);
            ParsedFormula b = parse_formula(formula_b, lang);
            std::size_t d = std::max({gen.dimension(), a.dimension(), b.dimension()});
            if (d == 0) d = 1;
            Presentation pres{d, gen.compile(d)};
            QuotientElement qa{a.compile(d), &pres};
            QuotientElement qb{b.compile(d), &pres};
            return report_bool("quotient-equal", quotient_equal(qa, qb), as_json);
        }
    } catch (const CellBudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
