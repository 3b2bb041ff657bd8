#include <doctest.h>

#include "z2tk/acceptance.hpp"
#include "z2tk/module_tools.hpp"

using namespace z2tk;

TEST_SUITE("module_tools") {

TEST_CASE("rref") {
    Vector<RationalFunction> e1(32);
    e1[0] = RationalFunction(1);
    CHECK(rref_symbolic({e1, e1}, 32).dim() == 1);

    Vector<RationalFunction> w(32);
    w[0] = RationalFunction::lambda() - RationalFunction::E() * RationalFunction::E();
    CHECK(rref_symbolic({w}, 32).dim() == 1);
    CHECK(rref_specialized({w}, 32, {1, 1}).dim() == 0);

    Vector<RationalFunction> p(32);
    p[0] = RationalFunction(1) / RationalFunction::lambda();
    CHECK_THROWS_AS(rref_specialized({p}, 32, {1, 0}), PoleError);
}

TEST_CASE("Psi basis spans D(E)") {
    const DecompositionReport& d = decomposition_DE();
    CHECK(d.rank == 16);
    CHECK(d.spans());
    CHECK(d.all_closed());
    CHECK(d.all_relations_pass());
    REQUIRE(d.blocks.size() == 4);
    const IrrepReport& b4 = d.blocks[3];
    CHECK(b4.action_table.at(Generator::Q10) == std::vector<std::string>{"E*chi", "0", "0", "E*u"});
}

TEST_CASE("closure of u1 in D(E) is four-dimensional") {
    const InducedModule& m = build_DE();
    SymbolicSubspace s = submodule_closure(m.rep, {m.vector("u1")});
    CHECK(s.dim() == 4);
    // idempotent
    CHECK(submodule_closure(m.rep, s.rows).dim() == 4);
    // stable under every generator
    for (const RepMatrix& g : action_matrices(m.rep))
        for (const auto& r : s.rows)
            CHECK(s.contains(g * r));
}

TEST_CASE("D(E,lambda) decomposition") {
    const DecompositionReport& d = decomposition_DEl();
    CHECK(d.rank == 32);
    CHECK(d.all_closed());
    CHECK(d.all_relations_pass());
    REQUIRE(d.blocks.size() == 4);
    std::vector<std::string> z{"lambda*u1", "u2", "v1", "lambda*v2", "-lambda*sigma2", "-sigma1", "-lambda*chi2",
                               "-chi1"};
    CHECK(d.blocks[0].action_table.at(Generator::Z) == z);
}

TEST_CASE("invariant subspace probe") {
    CHECK(invariant_subspace_probe("D1", {1, 1}, 0, 1).closure_dim == 4);
    CHECK(invariant_subspace_probe("D2", {2, 4}, 1, 0).closure_dim == 4);
    CHECK(invariant_subspace_probe("D1", {1, 3}, 0, 1).closure_dim == 8);
    CHECK(invariant_subspace_probe("D1", {1, 2}, 1, 1).closure_dim == 8);
    // wrong seed on the locus
    CHECK(invariant_subspace_probe("D1", {1, 1}, 1, 0).closure_dim == 8);
    CHECK_THROWS(invariant_subspace_probe("D1", {0, 0}, 0, 1));
    CHECK_THROWS(invariant_subspace_probe("D3", {1, 1}, 0, 1));
    ProbeReport r = invariant_subspace_probe("D1", {1, 1}, 0, 1);
    CHECK(r.invariant_basis.size() == 4);
    CHECK(r.witnesses_proportional);
}

TEST_CASE("panel") {
    for (const Point& p : default_panel()) {
        size_t want = on_locus(p) ? 4 : 8;
        for (const std::string b : {"D1", "D2"}) {
            auto [c1, c2] = locus_seed(b);
            CHECK(invariant_subspace_probe(b, p, c1, c2).closure_dim == want);
        }
    }
}

TEST_CASE("intertwiners") {
    CHECK(intertwiner_dim(block_rep("D1"), block_rep("D2"), {2, 3}) == 0);
    IntertwinerReport self = intertwiner(block_rep("D1"), block_rep("D1"), {2, 3});
    CHECK(self.dim >= 1);
    CHECK(self.contains_identity);
    CHECK(intertwiner(block_rep("D1"), block_rep("D1t"), {2, 3}).has_invertible);
    CHECK(intertwiner_dim(block_rep("DE1"), block_rep("DE4"), {2, 0}) == 0);
}

TEST_CASE("rescaled four-dimensional irreps") {
    IrrepReport a = extract_irrep_4d("Phi1", true);
    CHECK(a.matches_printed);
    CHECK(a.action_table.at(Generator::Z) == std::vector<std::string>{"E*u", "E*v", "-E*sigma", "-E*chi"});
    IrrepReport b = extract_irrep_4d("Phi2", true);
    CHECK(b.matches_printed);
    CHECK(b.action_table.at(Generator::Q10) == std::vector<std::string>{"chi", "-sigma", "0", "0"});
    IrrepReport c = extract_irrep_4d("Phi1", false);
    CHECK(c.action_table.at(Generator::Q10) == std::vector<std::string>{"0", "0", "E*v", "-i*u"});
}

} // TEST_SUITE
