#include "z2tk/mechanics_catalog.hpp"

#include <algorithm>

namespace z2tk {

namespace {

const char* const kFermions = " - i*psibar*dpsi - i*xibar*dxi";

GradedPoly P(const std::string& t) { return parse_graded_poly(t); }

Symbol field(FieldName f, bool bar = false) { return Symbol::field(f, bar); }

} // namespace

const std::vector<std::string>& catalogue_names() {
    static const std::vector<std::string> names{"L0", "L1", "L2", "L3", "L4", "Lg"};
    return names;
}

const Lagrangian& catalogue(const std::string& name) {
    static const std::map<std::string, Lagrangian> lagrangians = [] {
        std::map<std::string, Lagrangian> m;
        auto add = [&](const char* n, const std::string& bos, const char* sys) {
            m.emplace(n, Lagrangian{n, P(bos + kFermions), &variable_system(sys)});
        };
        add("L0", "dxbar*dx + dzbar*dz", "x,z");
        add("L1", "dxbar*dx + Fbar*F", "x,F");
        add("L2", "dy^2 + A^2 + Fbar*F", "y,A,F");
        add("L3", "dy^2 + A^2 + dzbar*dz", "y,A,z");
        add("L4", "abar*a + dzbar*dz", "a,z");
        m.emplace("Lg", Lagrangian{"Lg", build_action1(P("mu*x*xbar")), &base_system()});
        return m;
    }();
    auto it = lagrangians.find(name);
    if (it == lagrangians.end())
        throw Error("unknown Lagrangian " + name);
    return it->second;
}

const GradedPoly& action1_display() {
    static const GradedPoly d = P("2*i*mu*(dx*ddzbar - ddxbar*dz + i*dpsibar*dxi - i*dpsi*dxibar)");
    return d;
}

const PrintedChargeSet& printed_charges(const std::string& name) {
    using G = Generator;
    using FN = FieldName;
    static const std::map<std::string, PrintedChargeSet> sets = [] {
        std::map<std::string, PrintedChargeSet> m;
        auto add = [&](const char* n, std::vector<Symbol> shell, std::array<const char*, 5> q, bool zv) {
            PrintedChargeSet s{n, std::move(shell), {}, zv};
            const G order[] = {G::Q10, G::Q10d, G::Q01, G::Q01d, G::Z};
            for (size_t k = 0; k < 5; ++k)
                s.charges[order[k]] = P(q[k]);
            m.emplace(n, std::move(s));
        };
        add("L0", {},
            {"dx*psibar + dz*xibar", "dxbar*psi - dzbar*xi", "dx*xibar + dz*psibar", "dxbar*xi - dzbar*psi",
             "dxbar*dz + dx*dzbar"},
            false);
        add("L1", {field(FN::F), field(FN::F, true)}, {"dx*psibar", "dxbar*psi", "dx*xibar", "dxbar*xi", "0"}, true);
        add("L2", {field(FN::A)}, {"dy*psibar", "dy*psi", "dy*xibar", "dy*xi", "A*(F - Fbar)"}, true);
        add("L3", {},
            {"dy*psibar + dz*xibar", "dy*psi - dzbar*xi", "dy*xibar + dz*psibar", "dy*xi - dzbar*psi",
             "dy*(dz + dzbar)"},
            false);
        add("L4", {field(FN::a), field(FN::a, true)}, {"dz*xibar", "dzbar*xi", "dz*psibar", "dzbar*psi", "0"},
            true);
        return m;
    }();
    auto it = sets.find(name);
    if (it == sets.end())
        throw Error("no printed charges for " + name);
    return it->second;
}

bool MechanicsReport::invariant() const {
    return !variations.empty() && std::all_of(variations.begin(), variations.end(),
                                              [](const VariationCheck& v) { return v.invariance.is_total; });
}

bool MechanicsReport::charges_match() const {
    return !charges.empty() && std::all_of(charges.begin(), charges.end(), [](const ChargeFinding& c) {
        return c.factor.has_value() && c.conserved && c.degree_ok;
    });
}

bool MechanicsReport::ok() const {
    return invariant() && charges_match() && z_vanishes == z_expected_to_vanish && real_mod_total_derivative;
}

namespace {

bool real_mod_td(const GradedPoly& L) {
    GradedPoly d = conjugate(L) - L;
    return d.is_zero() || is_total_derivative(d).is_total;
}

bool paired(const NoetherSet& ns, Generator a, Generator b) {
    return proportionality(conjugate(ns.charge(a).charge), ns.charge(b).charge).has_value();
}

} // namespace

MechanicsReport analyze_lagrangian(const std::string& name) {
    if (name == "Lg")
        throw Error("Lg is analysed with analyze_action1");
    const Lagrangian& L = catalogue(name);
    const PrintedChargeSet& ref = printed_charges(name);
    MechanicsReport r;
    r.name = name;
    r.system = L.system->name;
    for (const Symbol& s : L.system->fields)
        r.variables.push_back(s.to_string());
    r.lagrangian = L.expr;
    r.real_mod_total_derivative = real_mod_td(L.expr);
    for (const Symbol& q : L.system->fields)
        r.equations.emplace_back(q, euler_lagrange(L.expr, q));
    r.eliminated = ref.on_shell;
    r.z_expected_to_vanish = ref.z_vanishes;

    NoetherSet ns = noether_charges(L);
    r.variations = ns.variations;
    for (const NoetherCharge& c : ns.charges) {
        ChargeFinding f{c.gen, c.charge, substitute_eom(c.charge, L, ref.on_shell), ref.charges.at(c.gen),
                        std::nullopt, c.conserved, false};
        f.factor = proportionality(f.computed, f.printed);
        auto d = f.computed.degree();
        f.degree_ok = f.computed.is_zero() || (d && *d == degree_of(c.gen));
        r.charges.push_back(std::move(f));
    }
    r.conjugation_pairs = paired(ns, Generator::Q10, Generator::Q10d) && paired(ns, Generator::Q01, Generator::Q01d);
    for (const ChargeFinding& c : r.charges)
        if (c.gen == Generator::Z)
            r.z_vanishes = c.reduced.is_zero();
    return r;
}

bool Action1Report::invariant() const {
    return !variations.empty() && std::all_of(variations.begin(), variations.end(),
                                              [](const VariationCheck& v) { return v.invariance.is_total; });
}

Action1Report analyze_action1(const GradedPoly& g) {
    Action1Report r;
    r.g = g;
    r.lagrangian = build_action1(g);
    r.real_mod_total_derivative = real_mod_td(r.lagrangian);
    for (Delta d : kAllDeltas) {
        VariationCheck v{d, apply_delta(d, r.lagrangian), {}};
        v.invariance = is_total_derivative(v.variation);
        r.variations.push_back(std::move(v));
    }
    if (g == P("mu*x*xbar")) {
        r.display = action1_display();
        GradedPoly diff = r.lagrangian - *r.display;
        r.display_difference = diff.is_zero() ? TotalDerivative{true, GradedPoly()} : is_total_derivative(diff);
    }
    return r;
}

HigherDerivativeIdentity higher_derivative_identity(const GradedPoly& g) {
    using G = Generator;
    auto A = [](G gen, const GradedPoly& p) { return apply_generator(gen, p); };
    const GaussianRational minus_i = -GaussianRational::i();
    HigherDerivativeIdentity h;
    GradedPoly inner = A(G::Q01d, A(G::Q01, g));
    h.lhs = A(G::Q10, build_action1(g));
    h.literal_rhs = time_derivative(A(G::Z, inner)).scaled(minus_i);
    h.corrected_rhs = time_derivative(A(G::Z, A(G::Q10, inner))).scaled(minus_i);
    h.lhs_degree = h.lhs.degree();
    h.literal_degree = h.literal_rhs.degree();
    h.literal_holds = h.lhs == h.literal_rhs;
    h.corrected_holds = h.lhs == h.corrected_rhs;
    return h;
}

} // namespace z2tk
