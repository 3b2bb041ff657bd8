#include "z2tk/z2tk.h"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <memory>

namespace {

// "E,lambda" -> ["E", "lambda"]; the literals themselves are checked by the library
nlohmann::json pair_of(const std::string& s, const char* what) {
    auto comma = s.find(',');
    if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
        throw CLI::ValidationError(what, "expected two values separated by a comma, got '" + s + "'");
    return nlohmann::json::array({s.substr(0, comma), s.substr(comma + 1)});
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact checks for the Z2xZ2-graded supersymmetry algebra, its induced modules and mechanics"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text", output;
    unsigned deriv_cap = 0;
    app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
    app.add_option("--output,-o", output, "write the report here instead of stdout");
    app.add_option("--deriv-cap", deriv_cap, "highest time-derivative order (default 6)")
        ->envname("Z2TK_DERIV_CAP")
        ->check(CLI::Range(1u, 60u));

    nlohmann::json cfg = nlohmann::json::object();
    std::string rep, block, E, lambda, seed, a, b, what, lagrangian, g;
    std::vector<std::string> points;
    bool lambda_eq_E2 = false, on_shell = false, action1 = false;

    auto* vr = app.add_subcommand("verify-relations", "check every defining relation on a representation");
    vr->add_option("--rep", rep, "DE, DEl, DE1..DE4, D1, D1t, D2, D2t, Phi1, Phi2")->default_val("DEl");

    auto* dec = app.add_subcommand("decompose", "change of basis into the listed blocks, diffed against the tables");
    dec->add_option("--rep", rep, "DE or DEl")->default_val("DEl");
    dec->add_flag("--lambda-eq-E2", lambda_eq_E2, "also extract the four-dimensional irreps on lambda = E^2");

    auto add_points = [&](CLI::App* sub) {
        sub->add_option("--E", E, "energy E0 (with --lambda)");
        sub->add_option("--lambda", lambda, "lambda0 (with --E)");
        sub->add_option("--point", points, "E,lambda; repeatable");
    };
    auto* probe = app.add_subcommand("probe", "closure of c1*v1 + c2*v2 over specialization points");
    probe->add_option("--block", block, "D1 or D2 (default both)");
    probe->add_option("--seed", seed, "c1,c2 (default: the seed that gives the 4-dim subspace)");
    add_points(probe);

    auto* inter = app.add_subcommand("intertwine", "dimension of the space of intertwiners");
    inter->add_option("--a", a, "first representation");
    inter->add_option("--b", b, "second representation");
    add_points(inter);

    auto* mech = app.add_subcommand("mechanics", "invariance, Euler-Lagrange equations and Noether charges");
    mech->add_option("--L", lagrangian, "L0..L4 or Lg")->default_val("L0");
    mech->add_flag("--on-shell", on_shell, "show charges after eliminating auxiliary variables");
    mech->add_flag("--action1", action1, "build L = Z Q10d Q10 Q01d Q01 g from --g");
    mech->add_option("--g", g, "degree (1,1) expression, e.g. \"mu*x*xbar\"");

    auto* dump = app.add_subcommand("dump", "print matrices, relations, Lagrangians or variable systems");
    dump->add_option("what", what, "relations, lagrangians, systems, or a representation name")->default_val("relations");

    app.add_subcommand("all", "run every check in dependency order");

    try {
        app.parse(argc, argv);
        CLI::App* sub = app.get_subcommands().front();
        cfg["command"] = sub->get_name();
        if (sub == vr || sub == dec)
            cfg["rep"] = rep;
        if (sub == dec && lambda_eq_E2)
            cfg["lambda_eq_E2"] = true;
        if (sub == probe || sub == inter) {
            if (E.empty() != lambda.empty())
                throw CLI::ValidationError("--E/--lambda", "give both or neither");
            nlohmann::json pts = nlohmann::json::array();
            if (!E.empty())
                pts.push_back({E, lambda});
            for (const auto& p : points)
                pts.push_back(pair_of(p, "--point"));
            if (!pts.empty())
                cfg["points"] = pts;
        }
        if (sub == probe) {
            if (!block.empty())
                cfg["block"] = block;
            if (!seed.empty())
                cfg["seed"] = pair_of(seed, "--seed");
        }
        if (sub == inter) {
            if (!a.empty())
                cfg["a"] = a;
            if (!b.empty())
                cfg["b"] = b;
        }
        if (sub == mech) {
            if (action1 || !g.empty()) {
                cfg["action1"] = true;
                if (!g.empty())
                    cfg["g"] = g;
            } else {
                cfg["lagrangian"] = lagrangian;
            }
            if (on_shell)
                cfg["on_shell"] = true;
        }
        if (sub == dump)
            cfg["what"] = what;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : Z2TK_BAD_ARGUMENT;
    }

    std::unique_ptr<z2tk_session, decltype(&z2tk_session_destroy)> s(z2tk_session_create(), z2tk_session_destroy);
    if (!s) {
        std::cerr << "z2tk: cannot create session\n";
        return Z2TK_INTERNAL;
    }
    // CLI11 drops env values that fail the range check instead of reporting them
    if (deriv_cap == 0 && std::getenv("Z2TK_DERIV_CAP")) {
        std::cerr << "z2tk: Z2TK_DERIV_CAP must be an integer between 1 and 60\n";
        return Z2TK_BAD_ARGUMENT;
    }
    if (deriv_cap != 0 && z2tk_set_deriv_cap(s.get(), deriv_cap) != Z2TK_OK) {
        std::cerr << "z2tk: " << z2tk_last_error(s.get()) << "\n";
        return Z2TK_BAD_ARGUMENT;
    }
    z2tk_status status = z2tk_run(s.get(), cfg.dump().c_str());
    const char* text = z2tk_report(s.get(), format == "json" ? Z2TK_FORMAT_JSON : Z2TK_FORMAT_TEXT);
    if (output.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(output, std::ios::binary);
        if (!(out << text)) {
            std::cerr << "z2tk: cannot write " << output << "\n";
            return Z2TK_INTERNAL;
        }
    }
    if (status == Z2TK_BAD_ARGUMENT || status == Z2TK_INTERNAL)
        std::cerr << "z2tk: " << z2tk_last_error(s.get()) << "\n";
    return status;
}
