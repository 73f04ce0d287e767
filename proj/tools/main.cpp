// Command-line front end: kostka, coinv-dim, weyl-char, weyl-dim, act,
// theta bubble|pi, verify. JSON on stdout by default; exit 0 on success,
// 1 on verification failure, 2 on usage error.

#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "weylpoly/expr.hpp"
#include "weylpoly/verify.hpp"

namespace {

using nlohmann::ordered_json;
using namespace weylpoly;

Composition parse_parts(const std::string& text) {
    std::vector<int> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("bad integer list: " + text);
        }
        while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
            ++used;
        if (used != item.size()) throw std::invalid_argument("bad integer list: " + text);
        parts.push_back(v);
    }
    if (parts.empty()) throw std::invalid_argument("empty integer list");
    return Composition(std::move(parts));
}

ordered_json tpoly_json(const TPoly& p) {
    ordered_json out = ordered_json::array();
    for (const auto& [e, c] : p.coeffs) out.push_back(ordered_json::array({e, c}));
    return out;
}

std::string tpoly_text(const TPoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.coeffs) {
        long long a = c < 0 ? -c : c;
        if (out.empty()) {
            if (c < 0) out += "-";
        } else {
            out += c < 0 ? " - " : " + ";
        }
        std::string body = e == 0 ? "" : e == 1 ? "t" : "t^" + std::to_string(e);
        if (a != 1 || body.empty())
            out += body.empty() ? std::to_string(a) : std::to_string(a) + "*" + body;
        else
            out += body;
    }
    return out;
}

ordered_json mpoly_json(const MPoly& p) {
    ordered_json out = ordered_json::array();
    for (const auto& [e, c] : p.terms) {
        ordered_json term;
        term["exps"] = e;
        term["coef"] = c.str();
        out.push_back(term);
    }
    return out;
}

void emit(const ordered_json& doc) { std::cout << doc.dump() << "\n"; }

int run_kostka(const std::string& lambda_s, const std::string& mu_s, bool number) {
    Partition lambda = parse_parts(lambda_s);
    Composition mu = parse_parts(mu_s);
    if (number) {
        emit(ordered_json(kostka_number(lambda, mu)));
        return 0;
    }
    emit(tpoly_json(kostka_foulkes(lambda, mu)));
    return 0;
}

int run_coinv_dim(const std::string& lambda_s, const std::string& nu_s,
                  const std::string& method) {
    Partition lambda = parse_parts(lambda_s);
    Composition nu = parse_parts(nu_s);
    if (method == "linear") {
        emit(tpoly_json(coinv_graded_dim_linear(lambda, nu)));
        return 0;
    }
    if (method == "formula") {
        emit(tpoly_json(coinv_graded_dim_formula(lambda, nu)));
        return 0;
    }
    TPoly lin = coinv_graded_dim_linear(lambda, nu);
    TPoly frm = coinv_graded_dim_formula(lambda, nu);
    if (lin != frm) {
        ordered_json doc;
        doc["linear"] = tpoly_json(lin);
        doc["formula"] = tpoly_json(frm);
        emit(doc);
        return 1;
    }
    emit(tpoly_json(lin));
    return 0;
}

int run_weyl_char(const std::string& lambda_s, bool csv) {
    CharacterTable table = weyl_graded_character(parse_parts(lambda_s));
    if (csv) {
        std::cout << "nu,dim\n";
        for (const CharacterEntry& e : table.entries) {
            std::string nu;
            for (std::size_t k = 0; k < e.nu.parts.size(); ++k) {
                if (k) nu += ",";
                nu += std::to_string(e.nu.parts[k]);
            }
            std::cout << "\"" << nu << "\",\"" << tpoly_text(e.dim) << "\"\n";
        }
        return 0;
    }
    ordered_json doc;
    doc["lambda"] = table.lambda.parts;
    doc["entries"] = ordered_json::array();
    for (const CharacterEntry& e : table.entries) {
        ordered_json row;
        row["nu"] = e.nu.parts;
        row["dim"] = tpoly_json(e.dim);
        doc["entries"].push_back(row);
    }
    emit(doc);
    return 0;
}

int run_weyl_dim(const std::string& lambda_s, const std::string& nu_s) {
    emit(tpoly_json(weyl_weight_graded_dim(parse_parts(lambda_s), parse_parts(nu_s))));
    return 0;
}

ordered_json weight_vector_json(const WeightVector& v) {
    ordered_json doc;
    if (v.is_zero()) {
        doc["nu"] = nullptr;
        doc["poly"] = ordered_json::array();
        doc["text"] = "0";
    } else {
        doc["nu"] = v.nu.parts;
        doc["poly"] = mpoly_json(v.p);
        doc["text"] = render_poly(v.p);
    }
    return doc;
}

int run_act(const std::string& gen, int i, int j, const std::string& nu_s,
            const std::string& poly_s) {
    Composition nu = parse_parts(nu_s);
    BlockSymPoly input = parse_poly(poly_s, nu);
    GeneratorSymbol g{gen[0], i, j};
    emit(weight_vector_json(apply_generator(g, WeightVector{nu, input.poly})));
    return 0;
}

int run_theta_bubble(int i, int r, const std::string& orient, const std::string& nu_s) {
    Composition nu = parse_parts(nu_s);
    BubbleDir dir = orient == "cw" ? BubbleDir::cw : BubbleDir::ccw;
    MPoly out = bubble_image(i, nu, r, dir);
    ordered_json doc;
    doc["nu"] = nu.parts;
    doc["poly"] = mpoly_json(out);
    doc["text"] = render_poly(out);
    emit(doc);
    return 0;
}

int run_theta_pi(int i, int j, const std::string& nu_s) {
    Composition nu = parse_parts(nu_s);
    MPoly out = pi_image(i, j, nu);
    ordered_json doc;
    doc["nu"] = nu.parts;
    doc["poly"] = mpoly_json(out);
    doc["text"] = render_poly(out);
    emit(doc);
    return 0;
}

int run_verify_cmd(const std::string& suite, int n, int N, int cutoff, int jmax) {
    int failing = 0;
    for (const CheckReport& rep : run_verify(suite, n, N, cutoff, jmax)) {
        std::printf("== %s\n", rep.suite.c_str());
        for (const CheckResult& c : rep.checks) {
            std::printf("  %-46s %s\n", c.name.c_str(), c.pass ? "pass" : "FAIL");
            if (!c.pass) {
                std::printf("      first failure: %s\n", c.witness.c_str());
                ++failing;
            }
        }
        std::fprintf(stderr, "%s: %lld ms\n", rep.suite.c_str(), rep.wall_ms);
    }
    return failing == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"block-symmetric polynomial representation toolkit"};
    app.require_subcommand(1);

    std::string lambda_s, mu_s, nu_s, method = "both", gen, orient, poly_s = "1";
    std::string suite = "all";
    int i = 1, j = 0, r = 0, n = 2, N = 3, cutoff = 3, jmax = 2;
    bool number = false, as_csv = false, as_json = false;

    CLI::App* kostka = app.add_subcommand("kostka", "Kostka-Foulkes polynomial");
    kostka->add_option("--lambda", lambda_s, "partition, comma separated")->required();
    kostka->add_option("--mu", mu_s, "content, comma separated")->required();
    kostka->add_flag("--number", number, "emit the Kostka number instead");

    CLI::App* coinv = app.add_subcommand("coinv-dim", "graded dimension of a coinvariant algebra");
    coinv->add_option("--lambda", lambda_s)->required();
    coinv->add_option("--nu", nu_s)->required();
    coinv->add_option("--method", method, "linear|formula|both (default both)")
        ->check(CLI::IsMember({"linear", "formula", "both"}));

    CLI::App* wchar = app.add_subcommand("weyl-char", "full graded character table");
    wchar->add_option("--lambda", lambda_s)->required();
    CLI::Option* optcsv = wchar->add_flag("--csv", as_csv, "emit CSV");
    wchar->add_flag("--json", as_json, "emit JSON (default)")->excludes(optcsv);

    CLI::App* wdim = app.add_subcommand("weyl-dim", "graded dimension of one weight space");
    wdim->add_option("--lambda", lambda_s)->required();
    wdim->add_option("--nu", nu_s)->required();

    CLI::App* act = app.add_subcommand("act", "apply one current generator");
    act->add_option("--gen", gen, "E|F|H")->required()->check(CLI::IsMember({"E", "F", "H"}));
    act->add_option("--i", i, "node index")->required();
    act->add_option("--j", j, "current degree (default 0)");
    act->add_option("--nu", nu_s)->required();
    act->add_option("--poly", poly_s, "block-symmetric input (default 1)");

    CLI::App* theta = app.add_subcommand("theta", "closed diagram images");
    theta->require_subcommand(1);
    CLI::App* tbub = theta->add_subcommand("bubble", "dotted bubble past the threshold");
    tbub->add_option("--i", i, "node index")->required();
    tbub->add_option("--r", r, "dots past the threshold (default 0)");
    tbub->add_option("--orient", orient, "cw|ccw")->required()->check(CLI::IsMember({"cw", "ccw"}));
    tbub->add_option("--nu", nu_s)->required();
    CLI::App* tpi = theta->add_subcommand("pi", "bubble-pair sum");
    tpi->add_option("--i", i, "node index")->required();
    tpi->add_option("--j", j, "degree (default 0)");
    tpi->add_option("--nu", nu_s)->required();

    CLI::App* verify = app.add_subcommand("verify", "run a relation suite");
    verify->add_option("--suite", suite, "current|theta|coinv|kostka|weyl|all")
        ->check(CLI::IsMember({"current", "theta", "coinv", "kostka", "weyl", "all"}));
    verify->add_option("--n", n, "number of blocks (default 2)");
    verify->add_option("--N", N, "number of variables (default 3)");
    verify->add_option("--cutoff", cutoff, "max exponent / t-degree (default 3)");
    verify->add_option("--jmax", jmax, "max current degree (default 2)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (kostka->parsed()) return run_kostka(lambda_s, mu_s, number);
        if (coinv->parsed()) return run_coinv_dim(lambda_s, nu_s, method);
        if (wchar->parsed()) return run_weyl_char(lambda_s, as_csv);
        if (wdim->parsed()) return run_weyl_dim(lambda_s, nu_s);
        if (act->parsed()) return run_act(gen, i, j, nu_s, poly_s);
        if (theta->parsed()) {
            if (tbub->parsed()) return run_theta_bubble(i, r, orient, nu_s);
            return run_theta_pi(i, j, nu_s);
        }
        if (verify->parsed()) return run_verify_cmd(suite, n, N, cutoff, jmax);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
