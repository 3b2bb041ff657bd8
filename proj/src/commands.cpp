#include "z2tk/commands.hpp"

#include "z2tk/acceptance.hpp"
#include "z2tk/expr_parser.hpp"
#include "z2tk/mechanics_catalog.hpp"
#include "z2tk/module_tools.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace z2tk {

namespace {

using json = nlohmann::json;

constexpr int kSchemaVersion = 1;

// --- config access ---------------------------------------------------------

struct Config {
    const json& j;

    std::string str(const char* key, const std::string& def = "") const {
        if (!j.contains(key) || j[key].is_null())
            return def;
        if (!j[key].is_string())
            throw UsageError(std::string("option ") + key + " must be a string");
        return j[key].get<std::string>();
    }
    bool flag(const char* key) const {
        if (!j.contains(key) || j[key].is_null())
            return false;
        if (!j[key].is_boolean())
            throw UsageError(std::string("option ") + key + " must be a boolean");
        return j[key].get<bool>();
    }
    bool has(const char* key) const { return j.contains(key) && !j[key].is_null(); }
};

GaussianRational literal(const json& v, const char* what) {
    if (!v.is_string())
        throw UsageError(std::string(what) + " must be written as a string such as \"3/2\" or \"1-2*i\"");
    try {
        return parse_gaussian_rational(v.get<std::string>());
    } catch (const Error& e) {
        throw UsageError(std::string("bad ") + what + ": " + e.what());
    }
}

std::vector<Point> points_from(const Config& cfg) {
    if (!cfg.has("points"))
        return default_panel();
    const json& arr = cfg.j["points"];
    if (!arr.is_array() || arr.empty())
        throw UsageError("points must be a nonempty list of [E, lambda] pairs");
    std::vector<Point> out;
    for (const json& p : arr) {
        if (!p.is_array() || p.size() != 2)
            throw UsageError("each point must be a pair [E, lambda]");
        out.push_back({literal(p[0], "E"), literal(p[1], "lambda")});
    }
    return out;
}

// --- report assembly -------------------------------------------------------

struct Report {
    explicit Report(std::string cmd) : command(std::move(cmd)) {}

    std::string command;
    std::vector<std::string> summary;
    json findings = json::array();
    json data = json::object();
    bool failed = false;

    void finding(const std::string& kind, const std::string& message) {
        findings.push_back({{"kind", kind}, {"message", message}});
    }
    void fail(const std::string& message) {
        failed = true;
        finding("failure", message);
    }

    CommandResult done() const {
        int code = failed ? kExitCheckFailed : kExitOk;
        json r = {{"tool", "z2tk"},
                  {"schema_version", kSchemaVersion},
                  {"command", command},
                  {"status", failed ? "check_failed" : "ok"},
                  {"exit_code", code},
                  {"summary", summary},
                  {"findings", findings},
                  {"data", data}};
        return {code, std::move(r)};
    }
};

CommandResult error_result(const std::string& command, int code, const std::string& message) {
    json r = {{"tool", "z2tk"},
              {"schema_version", kSchemaVersion},
              {"command", command},
              {"status", code == kExitUsage ? "bad_arguments" : "internal_error"},
              {"exit_code", code},
              {"summary", json::array({message})},
              {"findings", json::array()},
              {"data", json::object()},
              {"error", message}};
    return {code, std::move(r)};
}

// --- JSON for module types ---------------------------------------------------

json point_json(const Point& p) { return {{"E", p.E0.to_string()}, {"lambda", p.L0.to_string()}}; }

json table_json(const std::map<Generator, std::vector<std::string>>& t) {
    json out = json::object();
    for (const auto& [g, col] : t)
        out[std::string(name_of(g))] = col;
    return out;
}

json irrep_json(const IrrepReport& r) {
    json diffs = json::array();
    for (const TableDiff& d : r.diffs)
        diffs.push_back({{"generator", name_of(d.gen)},
                         {"column", d.column},
                         {"printed", d.printed},
                         {"computed", d.computed},
                         {"corrected", d.corrected},
                         {"matches_corrected", d.matches_corrected}});
    return {{"block", r.block},
            {"display", r.display},
            {"dim", r.dim},
            {"basis_independent", r.basis_independent},
            {"closure_passed", r.closure_passed},
            {"residual_nonzero", r.residual_nonzero},
            {"relations_pass", r.relations_pass},
            {"matches_printed", r.matches_printed},
            {"matches_corrected", r.matches_corrected},
            {"action_table", table_json(r.action_table)},
            {"diffs", diffs}};
}

json decomposition_json(const DecompositionReport& d) {
    json blocks = json::array(), printed = json::array(), errata = json::array(), locator = json::array();
    for (const auto& b : d.blocks)
        blocks.push_back(irrep_json(b));
    for (const auto& b : d.printed_blocks)
        printed.push_back(irrep_json(b));
    for (const auto& e : d.basis_errata)
        errata.push_back({{"block", e.block}, {"vector", e.vector}, {"printed", e.printed}, {"corrected", e.corrected}});
    for (const auto& l : d.locator)
        locator.push_back({{"block", l.block},
                           {"point", point_json(l.point)},
                           {"hom_dim", l.hom_dim},
                           {"mismatched", l.mismatched},
                           {"agrees_with_catalog", l.agrees_with_catalog}});
    return {{"rep", d.rep},
            {"ambient_dim", d.ambient_dim},
            {"rank", d.rank},
            {"printed_rank", d.printed_rank},
            {"spans", d.spans()},
            {"blocks", blocks},
            {"printed_blocks", printed},
            {"basis_errata", errata},
            {"locator", locator}};
}

json variation_json(const VariationCheck& v) {
    return {{"delta", name_of(v.delta)},
            {"variation", v.variation.to_string()},
            {"total_derivative", v.invariance.is_total},
            {"witness", v.invariance.witness ? json(v.invariance.witness->to_string()) : json(nullptr)}};
}

// --- representations by name -------------------------------------------------

struct NamedRep {
    MatrixRep rep;
    RationalFunction casimir; ///< expected scalar for Z^2
    std::string casimir_text;
};

const std::vector<std::string>& rep_names() {
    static const std::vector<std::string> names{"DE",  "DEl", "DE1", "DE2", "DE3",  "DE4",
                                                "D1",  "D1t", "D2",  "D2t", "Phi1", "Phi2"};
    return names;
}

NamedRep named_rep(const std::string& name) {
    if (std::find(rep_names().begin(), rep_names().end(), name) == rep_names().end()) {
        std::string all;
        for (const auto& n : rep_names())
            all += (all.empty() ? "" : ", ") + n;
        throw UsageError("unknown representation '" + name + "' (expected one of " + all + ")");
    }
    if (name == "DE")
        return {build_DE().rep, RationalFunction(0), "0"};
    if (name == "DEl")
        return {build_DEl().rep, RationalFunction::lambda(), "lambda"};
    if (name.rfind("DE", 0) == 0)
        return {block_rep(name), RationalFunction(0), "0"};
    if (name.rfind("Phi", 0) == 0) {
        IrrepReport r = extract_irrep_4d(name, true);
        if (!r.closure_passed)
            throw Error("four-dimensional subspace " + name + " did not close");
        return {r.rep, RationalFunction::E() * RationalFunction::E(), "E^2"};
    }
    return {block_rep(name), RationalFunction::lambda(), "lambda"};
}

json rep_json(const MatrixRep& rep) {
    json degrees = json::array(), mats = json::object();
    for (const Degree& d : rep.basis_degrees)
        degrees.push_back(d.to_string());
    for (const auto& [g, m] : rep.mats)
        mats[std::string(name_of(g))] = sparse_entries_json(m);
    return {{"dim", rep.dim}, {"basis", rep.basis_names}, {"degrees", degrees}, {"matrices", mats}};
}

// --- commands -------------------------------------------------------------

CommandResult cmd_verify_relations(const Config& cfg) {
    Report out("verify-relations");
    const std::string name = cfg.str("rep", "DEl");
    NamedRep nr = named_rep(name);
    RelationReport rr = verify_relations(nr.rep);
    RepMatrix z2 = nr.rep.at(Generator::Z) * nr.rep.at(Generator::Z);
    bool casimir = z2 == RepMatrix::identity(nr.rep.dim).scaled(nr.casimir);
    bool z_zero = nr.rep.at(Generator::Z).is_zero();
    const std::string casimir_claim = nr.casimir_text == "0" ? std::string("Z^2 = 0") : "Z^2 = " + nr.casimir_text + "*Id";
    out.data = {{"rep", name},
                {"dim", nr.rep.dim},
                {"grading_ok", rr.grading_ok()},
                {"grading_violations", rr.grading.size()},
                {"pass_count", rr.pass_count()},
                {"relation_count", relation_list().size()},
                {"relations", to_json(rr)},
                {"casimir", {{"expected", casimir_claim}, {"holds", casimir}}},
                {"z_is_zero", z_zero}};
    out.summary.push_back(name + ": " + std::to_string(rr.pass_count()) + "/" +
                          std::to_string(relation_list().size()) + " relations hold exactly (dim " +
                          std::to_string(nr.rep.dim) + ")");
    out.summary.push_back(casimir_claim + (casimir ? " holds" : " FAILS"));
    if (z_zero)
        out.summary.push_back("Z is represented by the zero matrix");
    if (!rr.grading_ok())
        out.fail(std::to_string(rr.grading.size()) + " matrix entries violate the grading");
    for (const auto& r : rr.results)
        if (!r.pass)
            out.fail("relation " + r.relation.to_string() + " fails");
    if (!casimir)
        out.fail("Casimir check fails");
    return out.done();
}

void add_decomposition_findings(Report& out, const DecompositionReport& d) {
    for (const auto& e : d.basis_errata)
        out.finding("erratum", e.block + " basis vector " + e.vector + ": printed " + e.printed + ", closes with " +
                                   e.corrected);
    for (const auto& b : d.printed_blocks)
        if (!b.closure_passed)
            out.finding("erratum", "printed basis of " + b.block + " does not span a submodule (" +
                                       std::to_string(b.residual_nonzero) + " residual entries)");
    for (const auto& b : d.blocks)
        for (const auto& df : b.diffs)
            out.finding(df.matches_corrected ? "erratum" : "failure",
                        b.block + " " + std::string(name_of(df.gen)) + " on " + df.column + ": printed " + df.printed +
                            ", computed " + df.computed);
    for (const auto& l : d.locator)
        if (!l.agrees_with_catalog)
            out.finding("warning", "misprint locator disagrees with the catalogued errata for " + l.block);
}

CommandResult cmd_decompose(const Config& cfg) {
    Report out("decompose");
    const std::string rep = cfg.str("rep", "DEl");
    const bool locus = cfg.flag("lambda_eq_E2");
    if (rep != "DE" && rep != "DEl")
        throw UsageError("decompose needs --rep DE or --rep DEl");
    if (locus && rep != "DEl")
        throw UsageError("--lambda-eq-E2 applies to DEl only");
    const DecompositionReport& d = rep == "DE" ? decomposition_DE() : decomposition_DEl();
    out.data = decomposition_json(d);
    out.summary.push_back(rep + ": rank " + std::to_string(d.rank) + "/" + std::to_string(d.ambient_dim) +
                          " (printed basis rank " + std::to_string(d.printed_rank) + ")");
    for (const auto& b : d.blocks) {
        std::string state = b.matches_printed ? "matches the printed table"
                            : b.matches_corrected ? "matches after correcting " + std::to_string(b.diffs.size()) +
                                                        " printed entr" + (b.diffs.size() == 1 ? "y" : "ies")
                                                  : "DIFFERS from the printed table";
        out.summary.push_back(b.block + " (" + b.display + "): dim " + std::to_string(b.dim) + ", " +
                              (b.closure_passed ? "closed" : "NOT closed") + ", relations " +
                              (b.relations_pass ? "hold" : "FAIL") + ", " + state);
        if (!b.closure_passed || !b.relations_pass)
            out.fail(b.block + " is not a valid block");
    }
    if (!d.spans())
        out.fail("listed vectors do not span " + rep);
    add_decomposition_findings(out, d);
    if (locus) {
        json irreps = json::array();
        for (const char* n : {"Phi1", "Phi2"})
            for (bool rescaled : {false, true}) {
                IrrepReport r = extract_irrep_4d(n, rescaled);
                irreps.push_back(irrep_json(r));
                out.summary.push_back(r.block + ": dim " + std::to_string(r.dim) + ", " +
                                      (r.closure_passed ? "closed" : "NOT closed") + ", " +
                                      (r.matches_printed ? "matches the printed table" : "differs"));
                if (!r.closure_passed || !r.relations_pass)
                    out.fail(r.block + " is not a valid irrep");
                if (r.closure_passed && !r.matches_printed)
                    out.finding("warning", r.block + " differs from the printed table");
            }
        out.data["irreps_4d"] = irreps;
    }
    return out.done();
}

CommandResult cmd_probe(const Config& cfg) {
    Report out("probe");
    std::vector<std::string> blocks{"D1", "D2"};
    if (cfg.has("block")) {
        std::string b = cfg.str("block");
        if (b != "D1" && b != "D2")
            throw UsageError("probe --block must be D1 or D2");
        blocks = {b};
    }
    std::optional<std::pair<GaussianRational, GaussianRational>> seed;
    if (cfg.has("seed")) {
        const json& s = cfg.j["seed"];
        if (!s.is_array() || s.size() != 2)
            throw UsageError("seed must be a pair c1,c2");
        seed = std::pair{literal(s[0], "c1"), literal(s[1], "c2")};
        if (seed->first.is_zero() && seed->second.is_zero())
            throw UsageError("seed (0,0) spans nothing");
    }
    const bool explicit_points = cfg.has("points");
    std::vector<Point> points = points_from(cfg);
    json results = json::array(), skipped = json::array();
    for (const std::string& b : blocks)
        for (const Point& p : points) {
            auto [c1, c2] = seed ? *seed : locus_seed(b);
            ProbeReport r;
            try {
                r = invariant_subspace_probe(b, p, c1, c2);
            } catch (const PoleError& e) {
                if (explicit_points && points.size() == 1)
                    throw UsageError(std::string("rejected: ") + e.what());
                skipped.push_back({{"block", b}, {"point", point_json(p)}, {"reason", e.what()}});
                out.finding("warning", b + " at " + p.to_string() + " skipped: " + e.what());
                continue;
            }
            const bool locus_seeded = !seed || *seed == locus_seed(b);
            json expected = nullptr;
            if (locus_seeded) {
                size_t want = on_locus(p) ? 4 : 8;
                expected = want;
                if (r.closure_dim != want)
                    out.fail(b + " at " + p.to_string() + ": closure dimension " + std::to_string(r.closure_dim) +
                             ", expected " + std::to_string(want));
            }
            json wit = json::array();
            for (const auto& [n, t] : r.witnesses)
                wit.push_back({{"name", n}, {"vector", t}});
            results.push_back({{"block", b},
                               {"point", point_json(p)},
                               {"on_locus", on_locus(p)},
                               {"seed", {c1.to_string(), c2.to_string()}},
                               {"closure_dim", r.closure_dim},
                               {"expected", expected},
                               {"witnesses", wit},
                               {"witnesses_proportional", r.witnesses_proportional},
                               {"invariant_basis", r.invariant_basis}});
            out.summary.push_back(b + " " + p.to_string() + " seed (" + c1.to_string() + "," + c2.to_string() +
                                  "): closure dim " + std::to_string(r.closure_dim) +
                                  (on_locus(p) ? "  [lambda = E^2]" : ""));
        }
    if (results.empty())
        throw UsageError("every requested point was rejected");
    out.data = {{"results", results}, {"skipped", skipped}};
    return out.done();
}

CommandResult cmd_intertwine(const Config& cfg) {
    Report out("intertwine");
    struct Pair {
        std::string a, b;
        Point p;
        std::optional<bool> expect_equivalent;
    };
    std::vector<Pair> pairs;
    if (cfg.has("a") || cfg.has("b")) {
        if (!cfg.has("a") || !cfg.has("b"))
            throw UsageError("intertwine needs both --a and --b");
        std::string a = cfg.str("a"), b = cfg.str("b");
        named_rep(a);
        named_rep(b);
        for (const Point& p : points_from(cfg))
            pairs.push_back({a, b, p, std::nullopt});
    } else {
        for (const Point& p : default_panel())
            if (!on_locus(p))
                pairs.push_back({"D1", "D2", p, false});
        for (const Point& p : default_panel()) {
            pairs.push_back({"D1", "D1t", p, true});
            pairs.push_back({"D2", "D2t", p, true});
        }
        for (int a = 1; a <= 4; ++a)
            for (int b = a + 1; b <= 4; ++b)
                pairs.push_back({"DE" + std::to_string(a), "DE" + std::to_string(b), {2, 0}, false});
    }
    json results = json::array();
    for (const Pair& pr : pairs) {
        IntertwinerReport r;
        try {
            r = intertwiner(named_rep(pr.a).rep, named_rep(pr.b).rep, pr.p);
        } catch (const PoleError& e) {
            out.finding("warning", pr.a + "~" + pr.b + " at " + pr.p.to_string() + " skipped: " + e.what());
            continue;
        }
        json expect = pr.expect_equivalent ? json(*pr.expect_equivalent ? "equivalent" : "inequivalent") : json(nullptr);
        results.push_back({{"a", pr.a},
                           {"b", pr.b},
                           {"point", point_json(pr.p)},
                           {"dim", r.dim},
                           {"has_invertible", r.has_invertible},
                           {"expected", expect}});
        out.summary.push_back(pr.a + " ~ " + pr.b + " at " + pr.p.to_string() + ": hom dim " + std::to_string(r.dim) +
                              (r.has_invertible ? ", invertible" : ""));
        if (pr.expect_equivalent && *pr.expect_equivalent && !r.has_invertible)
            out.fail(pr.a + " and " + pr.b + " should carry a common action at " + pr.p.to_string());
        if (pr.expect_equivalent && !*pr.expect_equivalent && r.dim != 0)
            out.fail(pr.a + " and " + pr.b + " admit a nonzero intertwiner at " + pr.p.to_string());
    }
    if (results.empty())
        throw UsageError("no pair could be evaluated");
    out.data = {{"results", results}};
    return out.done();
}

json identity_json(const HigherDerivativeIdentity& h) {
    auto deg = [](const std::optional<Degree>& d) { return d ? json(d->to_string()) : json(nullptr); };
    return {{"lhs", h.lhs.to_string()},
            {"lhs_degree", deg(h.lhs_degree)},
            {"literal_rhs", h.literal_rhs.to_string()},
            {"literal_degree", deg(h.literal_degree)},
            {"literal_holds", h.literal_holds},
            {"corrected_rhs", h.corrected_rhs.to_string()},
            {"corrected_holds", h.corrected_holds}};
}

CommandResult mechanics_action1(Report& out, const GradedPoly& g) {
    Action1Report a = analyze_action1(g);
    json vars = json::array();
    for (const auto& v : a.variations) {
        vars.push_back(variation_json(v));
        out.summary.push_back(std::string(name_of(v.delta)) + " L " +
                              (v.invariance.is_total ? "is a total derivative" : "is NOT a total derivative"));
        if (!v.invariance.is_total)
            out.fail(std::string(name_of(v.delta)) + " L is not a total derivative");
    }
    out.data = {{"g", g.to_string()},
                {"lagrangian", to_json(a.lagrangian)},
                {"real_mod_total_derivative", a.real_mod_total_derivative},
                {"variations", vars}};
    out.summary.insert(out.summary.begin(), "L = " + a.lagrangian.to_string());
    if (a.display) {
        out.data["display"] = a.display->to_string();
        out.data["matches_display"] = a.matches_display();
        out.data["display_witness"] = a.display_difference && a.display_difference->witness
                                          ? json(a.display_difference->witness->to_string())
                                          : json(nullptr);
        out.summary.push_back(std::string("printed display: ") +
                              (a.matches_display() ? "matches modulo a total derivative" : "does NOT match"));
        if (!a.matches_display())
            out.fail("build_action1 does not reproduce the printed display");
        HigherDerivativeIdentity h = higher_derivative_identity(g);
        out.data["q10_identity"] = identity_json(h);
        out.summary.push_back(std::string("Q10 L = -i d/dt(Z Q01d Q01 g): ") + (h.literal_holds ? "holds" : "fails") +
                              "; with Q10 inserted: " + (h.corrected_holds ? "holds" : "fails"));
        if (!h.literal_holds)
            out.finding("erratum", "Q10 L = -i d/dt(Z Q01d Q01 g) cannot hold (degrees differ); "
                                   "Q10 L = -i d/dt(Z Q10 Q01d Q01 g) " +
                                       std::string(h.corrected_holds ? "holds" : "fails"));
    }
    if (!a.real_mod_total_derivative)
        out.finding("warning", "L is not real modulo a total derivative under the conjugation used here");
    return out.done();
}

CommandResult cmd_mechanics(const Config& cfg) {
    Report out("mechanics");
    const bool on_shell = cfg.flag("on_shell");
    if (cfg.flag("action1") || cfg.has("g")) {
        if (!cfg.has("g"))
            throw UsageError("--action1 needs --g");
        GradedPoly g;
        try {
            g = parse_graded_poly(cfg.str("g"));
        } catch (const Error& e) {
            throw UsageError(std::string("bad --g: ") + e.what());
        }
        auto d = g.degree();
        if (g.is_zero() || !d || !(*d == Degree{1, 1}))
            throw UsageError("--g must be a nonzero expression of degree (1,1)");
        return mechanics_action1(out, g);
    }
    const std::string name = cfg.str("lagrangian", "L0");
    const auto& names = catalogue_names();
    if (std::find(names.begin(), names.end(), name) == names.end())
        throw UsageError("unknown Lagrangian '" + name + "' (L0..L4, Lg)");
    if (name == "Lg")
        return mechanics_action1(out, parse_graded_poly("mu*x*xbar"));

    MechanicsReport r = analyze_lagrangian(name);
    json vars = json::array(), el = json::array(), charges = json::array(), elim = json::array();
    for (const auto& v : r.variations) {
        vars.push_back(variation_json(v));
        if (!v.invariance.is_total)
            out.fail(std::string(name_of(v.delta)) + " " + name + " is not a total derivative");
    }
    for (const auto& [q, e] : r.equations)
        el.push_back({{"variable", q.to_string()}, {"expression", e.to_string()}});
    for (const Symbol& s : r.eliminated)
        elim.push_back(s.to_string());
    out.summary.push_back(name + " = " + r.lagrangian.to_string() + "   [variables " + r.system + "]");
    out.summary.push_back(std::string("invariant under delta10, delta01, delta11: ") + (r.invariant() ? "yes" : "NO"));
    for (const auto& c : r.charges) {
        charges.push_back({{"generator", name_of(c.gen)},
                           {"charge", to_json(c.computed)},
                           {"on_shell", c.reduced.to_string()},
                           {"printed", c.printed.to_string()},
                           {"factor", c.factor ? json(c.factor->to_string()) : json(nullptr)},
                           {"conserved", c.conserved},
                           {"degree_ok", c.degree_ok}});
        const GradedPoly& shown = on_shell ? c.reduced : c.computed;
        out.summary.push_back(std::string(name_of(c.gen)) + " = " + shown.to_string() +
                              (c.factor ? "   (printed charge times " + c.factor->to_string() + ")"
                                        : "   (NOT proportional to the printed charge)"));
        if (!c.conserved)
            out.fail(std::string(name_of(c.gen)) + " charge is not conserved");
        if (!c.factor)
            out.finding("warning", std::string(name_of(c.gen)) + " charge differs from the printed one");
    }
    std::string verdict = r.z_vanishes ? "Z vanishes" : "Z does not vanish";
    if (!r.eliminated.empty()) {
        std::string e;
        for (const auto& s : r.eliminated)
            e += (e.empty() ? "" : ", ") + s.to_string();
        verdict += " after eliminating " + e;
    }
    out.summary.push_back(verdict);
    if (r.z_vanishes != r.z_expected_to_vanish)
        out.finding("warning", "Z verdict differs from the printed statement");
    if (!r.real_mod_total_derivative)
        out.finding("warning", name + " is not real modulo a total derivative");
    out.data = {{"lagrangian", name},
                {"expression", to_json(r.lagrangian)},
                {"system", r.system},
                {"variables", r.variables},
                {"real_mod_total_derivative", r.real_mod_total_derivative},
                {"variations", vars},
                {"euler_lagrange", el},
                {"eliminated", elim},
                {"on_shell", on_shell},
                {"charges", charges},
                {"conjugation_pairs", r.conjugation_pairs},
                {"z_vanishes", r.z_vanishes},
                {"z_expected_to_vanish", r.z_expected_to_vanish}};
    return out.done();
}

CommandResult cmd_dump(const Config& cfg) {
    Report out("dump");
    const std::string what = cfg.str("what", "relations");
    if (what == "relations") {
        json rels = json::array();
        for (const auto& r : relation_list()) {
            rels.push_back(r.to_string());
            out.summary.push_back(r.to_string());
        }
        out.data = {{"what", what}, {"relations", rels}};
    } else if (what == "lagrangians") {
        json ls = json::array();
        for (const auto& n : catalogue_names()) {
            const Lagrangian& L = catalogue(n);
            ls.push_back({{"name", n}, {"system", L.system->name}, {"expression", to_json(L.expr)}});
            out.summary.push_back(n + " = " + L.expr.to_string());
        }
        out.data = {{"what", what}, {"lagrangians", ls}};
    } else if (what == "systems") {
        json ss = json::array();
        for (const char* n : {"x,z", "x,F", "y,A,F", "y,A,z", "a,z"}) {
            const VariableSystem& s = variable_system(n);
            json fields = json::array(), rules = json::object(), defs = json::array();
            for (const auto& f : s.fields)
                fields.push_back(f.to_string());
            for (const auto& [d, rule] : s.deltas) {
                json img = json::object();
                for (const auto& [f, p] : rule.images)
                    img[f.to_string()] = p.to_string();
                rules[std::string(name_of(d))] = img;
            }
            for (const auto& [f, p] : s.definitions)
                defs.push_back({{"variable", f.to_string()}, {"definition", p.to_string()}});
            ss.push_back({{"name", n}, {"fields", fields}, {"rules", rules}, {"definitions", defs}});
            std::string fl;
            for (const auto& f : s.fields)
                fl += (fl.empty() ? "" : ", ") + f.to_string();
            out.summary.push_back(std::string(n) + ": " + fl);
        }
        out.data = {{"what", what}, {"systems", ss}};
    } else {
        NamedRep nr = named_rep(what);
        out.data = {{"what", what}, {"rep", rep_json(nr.rep)}};
        out.summary.push_back(what + ": dim " + std::to_string(nr.rep.dim));
        for (const auto& [g, m] : nr.rep.mats)
            out.summary.push_back("  " + std::string(name_of(g)) + ": " + std::to_string(m.nonzero_count()) +
                                  " nonzero entries");
    }
    return out.done();
}

CommandResult cmd_all(const Config&) {
    Report out("all");
    json sections = json::array();
    auto section = [&](const json& config) {
        CommandResult r = run_command(config);
        for (const auto& f : r.report["findings"])
            out.findings.push_back({{"kind", f["kind"]},
                                    {"message", r.report["command"].get<std::string>() + ": " +
                                                    f["message"].get<std::string>()}});
        sections.push_back({{"config", config}, {"report", r.report}});
    };
    section({{"command", "verify-relations"}, {"rep", "DE"}});
    section({{"command", "verify-relations"}, {"rep", "DEl"}});
    section({{"command", "decompose"}, {"rep", "DE"}});
    section({{"command", "decompose"}, {"rep", "DEl"}, {"lambda_eq_E2", true}});
    section({{"command", "probe"}});
    section({{"command", "intertwine"}});
    for (const char* n : {"L0", "L1", "L2", "L3", "L4", "Lg"})
        section({{"command", "mechanics"}, {"lagrangian", n}, {"on_shell", true}});
    json criteria = json::array();
    for (const CriterionResult& c : evaluate_criteria()) {
        criteria.push_back(to_json(c));
        out.summary.push_back("criterion " + std::to_string(c.id) + " " + (c.pass ? "PASS" : "FAIL") + "  " + c.title +
                              ": " + c.detail);
        if (!c.pass)
            out.fail("criterion " + std::to_string(c.id) + " fails: " + c.detail);
    }
    out.data = {{"sections", sections}, {"criteria", criteria}};
    return out.done();
}

} // namespace

CommandResult run_command(const json& config) {
    std::string command = "?";
    try {
        if (!config.is_object())
            throw UsageError("config must be a JSON object");
        Config cfg{config};
        command = cfg.str("command");
        static const std::set<std::string> known{"command", "rep",   "lambda_eq_E2", "block", "points", "seed", "a",
                                                 "b",       "what",  "lagrangian",  "action1", "g",    "on_shell"};
        for (const auto& [k, v] : config.items())
            if (!known.count(k))
                throw UsageError("unknown option '" + k + "'");
        if (command == "verify-relations")
            return cmd_verify_relations(cfg);
        if (command == "decompose")
            return cmd_decompose(cfg);
        if (command == "probe")
            return cmd_probe(cfg);
        if (command == "intertwine")
            return cmd_intertwine(cfg);
        if (command == "mechanics")
            return cmd_mechanics(cfg);
        if (command == "dump")
            return cmd_dump(cfg);
        if (command == "all")
            return cmd_all(cfg);
        throw UsageError("unknown command '" + command + "'");
    } catch (const UsageError& e) {
        return error_result(command, kExitUsage, e.what());
    } catch (const DerivativeCapError& e) {
        // the cap is a user setting; raise it with --deriv-cap or Z2TK_DERIV_CAP
        return error_result(command, kExitUsage, std::string(e.what()) + " (raise --deriv-cap)");
    } catch (const std::exception& e) {
        return error_result(command, kExitInternal, e.what());
    }
}

std::string render_text(const json& report) {
    std::ostringstream os;
    os << "z2tk " << report.value("command", "?") << ": " << report.value("status", "?") << "\n";
    for (const auto& s : report["summary"])
        os << "  " << s.get<std::string>() << "\n";
    for (const auto& f : report["findings"])
        os << "  [" << f["kind"].get<std::string>() << "] " << f["message"].get<std::string>() << "\n";
    return os.str();
}

} // namespace z2tk
