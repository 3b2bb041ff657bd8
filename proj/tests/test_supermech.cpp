#include <doctest.h>

#include "z2tk/acceptance.hpp"
#include "z2tk/mechanics_catalog.hpp"
#include "z2tk/properties.hpp"
#include "z2tk/supermech.hpp"

#include <random>

using namespace z2tk;

namespace {
GradedPoly P(const char* s) { return parse_graded_poly(s); }
Symbol fld(FieldName f, bool bar = false, unsigned d = 0) { return Symbol::field(f, bar, d); }
} // namespace

TEST_SUITE("supermech") {

TEST_CASE("canonical product") {
    GradedPoly psi = P("psi"), xi = P("xi"), z = P("z");
    CHECK(canonical_product(psi, psi).is_zero());
    CHECK(canonical_product(xi, psi) == canonical_product(psi, xi));
    CHECK(canonical_product(xi, psi).to_string() == "psi*xi");
    CHECK(canonical_product(z, psi) == -canonical_product(psi, z));
    CHECK(P("psi*z*psi").is_zero());
    // z has degree (1,1): even, so it is not nilpotent
    CHECK(P("z*psi*z") == -P("psi*z*z"));
    CHECK(P("x*x") == canonical_product(P("x"), P("x")));
}

TEST_CASE("normalize with random swaps agrees") {
    std::mt19937 rng(5);
    Factors f{fld(FieldName::z), fld(FieldName::psi), fld(FieldName::xi, true), fld(FieldName::x, false, 1),
              Symbol::constant(ConstName::eps10)};
    NormalizedMonomial a = normalize(1, f);
    for (int k = 0; k < 20; ++k) {
        NormalizedMonomial b = normalize(1, f, &rng);
        CHECK(b.coeff == a.coeff);
        CHECK(b.factors == a.factors);
    }
    CHECK(check_confluence(200).pass());
}

TEST_CASE("conjugation") {
    CHECK(conjugate(P("x")) == P("xbar"));
    CHECK(conjugate(P("i*psi")) == P("-i*psibar"));
    CHECK(conjugate(P("eps10*psi")) == P("psibar*epsBar10"));
    CHECK(conjugate(P("eps11")) == P("eps11"));
    CHECK(check_conjugation_involution(100).pass());
}

TEST_CASE("time derivative") {
    CHECK(time_derivative(P("x*z")) == P("dx*z + x*dz"));
    CHECK(time_derivative(P("eps10")).is_zero());
    CHECK(time_derivative(P("psi*xi")) == P("dpsi*xi + psi*dxi"));
    CHECK(time_derivative(P("x"), 3) == GradedPoly::of(fld(FieldName::x, false, 3)));
    unsigned cap = derivative_cap();
    set_derivative_cap(2);
    CHECK_THROWS_AS(time_derivative(P("ddx")), DerivativeCapError);
    set_derivative_cap(cap);
}

TEST_CASE("delta rules") {
    CHECK(apply_delta(Delta::d10, P("x")) == P("epsBar10*psi"));
    CHECK(apply_delta(Delta::d10, P("psi")) == P("i*eps10*dx"));
    CHECK(apply_delta(Delta::d10, P("xbar")) == P("-eps10*psibar"));
    CHECK(apply_delta(Delta::d01, P("x")) == P("-i*epsBar01*xi"));
    CHECK(apply_delta(Delta::d11, P("x")) == P("-eps11*dz"));
    CHECK(apply_delta(Delta::d11, P("xibar")) == P("-eps11*dpsibar"));
    CHECK(apply_delta(Delta::d01, P("x*xbar")) ==
          P("-i*epsBar01*xi*xbar") + P("x*(-i*eps01*xibar)"));
}

TEST_CASE("generators") {
    CHECK(apply_generator(Generator::Q10d, P("x")) == P("-psi"));
    CHECK(apply_generator(Generator::Q10, P("psi")) == P("-i*dx"));
    CHECK(apply_generator(Generator::Z, P("x")) == P("i*dz"));
    CHECK(apply_generator(Generator::Z, P("z")) == P("i*dx"));
    CHECK(apply_generator(Generator::Q10, P("x")).is_zero());
    GradedPoly x = P("x");
    GradedPoly anti = apply_generator(Generator::Q10, apply_generator(Generator::Q10d, x)) +
                      apply_generator(Generator::Q10d, apply_generator(Generator::Q10, x));
    CHECK(anti == P("i*dx"));
    CHECK(apply_generator(Generator::Z, apply_generator(Generator::Z, x)) == P("-ddx"));
}

TEST_CASE("table-derived rules agree with the delta rules") {
    for (Generator g : {Generator::Q10, Generator::Q10d, Generator::Q01, Generator::Q01d, Generator::Z}) {
        CAPTURE(name_of(g));
        VariationRule a = generator_rule(g), b = generator_rule_from_tables(g);
        CHECK(a.degree == b.degree);
        CHECK(a.images == b.images);
    }
}

TEST_CASE("operator algebra on fields") {
    auto ids = operator_algebra_on_fields();
    CHECK(ids.size() == 176);
    for (const auto& f : ids) {
        CAPTURE(f.identity);
        CAPTURE(f.field);
        CHECK(f.residual.is_zero());
    }
}

TEST_CASE("Leibniz rule") { CHECK(check_leibniz(100).pass()); }

TEST_CASE("total derivatives") {
    TotalDerivative t = is_total_derivative(time_derivative(P("x*zbar")));
    CHECK(t.is_total);
    REQUIRE(t.witness);
    CHECK(*t.witness == P("x*zbar"));
    CHECK_FALSE(is_total_derivative(P("psibar*dpsi")).is_total);
    TotalDerivative v = is_total_derivative(apply_delta(Delta::d10, catalogue("L0").expr));
    CHECK(v.is_total);
    CHECK(time_derivative(*v.witness) == apply_delta(Delta::d10, catalogue("L0").expr));
}

TEST_CASE("Euler-Lagrange") {
    CHECK(euler_lagrange(catalogue("L2").expr, fld(FieldName::A)) == P("2*A"));
    CHECK(euler_lagrange(catalogue("L1").expr, fld(FieldName::F, true)) == P("F"));
    CHECK(euler_lagrange(catalogue("L0").expr, fld(FieldName::x, true)) == P("-ddx"));
}

TEST_CASE("catalogue") {
    CHECK(catalogue("L0").expr == P("dxbar*dx + dzbar*dz - i*(psibar*dpsi + xibar*dxi)"));
    CHECK(catalogue("L2").expr == P("dy*dy + A*A + F*Fbar - i*(psibar*dpsi + xibar*dxi)"));
    CHECK(catalogue("L4").expr == P("a*abar + dzbar*dz - i*(psibar*dpsi + xibar*dxi)"));
    CHECK_THROWS(catalogue("L9"));
}

TEST_CASE("Noether charges and on-shell reduction") {
    NoetherSet l0 = noether_charges(catalogue("L0"));
    CHECK(l0.invariant());
    for (const auto& c : l0.charges) {
        CHECK_FALSE(c.charge.is_zero());
        CHECK(c.conserved);
    }
    auto z0 = proportionality(l0.charge(Generator::Z).charge, P("dxbar*dz + dx*dzbar"));
    CHECK(z0);
    CHECK(noether_charges(catalogue("L1")).charge(Generator::Z).charge.is_zero());

    const Lagrangian& l2 = catalogue("L2");
    GradedPoly z2 = noether_charges(l2).charge(Generator::Z).charge;
    CHECK(proportionality(z2, P("A*(F - Fbar)")));
    CHECK(substitute_eom(z2, l2, {fld(FieldName::A)}).is_zero());

    const Lagrangian& l3 = catalogue("L3");
    GradedPoly z3 = substitute_eom(noether_charges(l3).charge(Generator::Z).charge, l3, {});
    CHECK(proportionality(z3, P("dy*(dz + dzbar)")));

    const Lagrangian& l4 = catalogue("L4");
    GradedPoly z4 = noether_charges(l4).charge(Generator::Z).charge;
    CHECK(substitute_eom(z4, l4, {fld(FieldName::a), fld(FieldName::a, true)}).is_zero());

    Lagrangian bad{"bad", P("dx*dxbar"), &base_system()};
    CHECK_THROWS(noether_charges(bad));
}

TEST_CASE("action from g") {
    CHECK(build_action1(GradedPoly()).is_zero());
    CHECK_THROWS(build_action1(P("x")));
    Action1Report r = analyze_action1(P("mu*x*xbar"));
    CHECK(r.matches_display());
    // the higher-derivative identity needs the extra Q10 to balance degrees
    HigherDerivativeIdentity h = higher_derivative_identity(P("mu*x*xbar"));
    CHECK_FALSE(h.literal_holds);
    CHECK(h.corrected_holds);
}

TEST_CASE("parser") {
    CHECK(P("2*i*mu*dx*ddzbar").to_string() == "2*i*mu*dx*ddzbar");
    CHECK(P("x^2") == P("x*x"));
    CHECK(P("x/2") == P("1/2*x"));
    CHECK_THROWS(P("0.5*x"));
    CHECK_THROWS(P("x*"));
    CHECK_THROWS(P("w"));
    auto j = to_json(P("-psibar*dpsi"));
    CHECK(j["text"] == "dpsi*psibar");
    CHECK(j["terms"].size() == 1);
}

} // TEST_SUITE
