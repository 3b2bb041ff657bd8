#include <doctest.h>

#include "z2tk/graded_core.hpp"
#include "z2tk/induced_rep.hpp"
#include "z2tk/properties.hpp"

using namespace z2tk;

TEST_SUITE("graded_core") {

TEST_CASE("swap sign") {
    CHECK(swap_sign({1, 0}, {0, 1}) == 1);
    CHECK(swap_sign({1, 0}, {1, 0}) == -1);
    CHECK(swap_sign({1, 1}, {1, 0}) == -1);
    CHECK(swap_sign({1, 1}, {1, 1}) == 1);
    CHECK(check_sign_table().pass());
}

TEST_CASE("relation list") {
    const auto& rels = relation_list();
    CHECK(rels.size() == 21);
    // Q10 and Q01d have degrees (1,0) and (0,1): their bracket is a commutator
    size_t anti = 0;
    for (const auto& r : rels)
        anti += r.is_anticommutator() ? 1 : 0;
    CHECK(anti > 0);
    CHECK(anti < rels.size());
}

TEST_CASE("relations hold on both modules") {
    RelationReport a = verify_relations(build_DEl().rep);
    CHECK(a.grading_ok());
    CHECK(a.pass_count() == 21);
    RelationReport b = verify_relations(build_DE().rep);
    CHECK(b.grading_ok());
    CHECK(b.all_pass());
}

TEST_CASE("a corrupted sign is caught") {
    MatrixRep rep = build_DEl().rep;
    RepMatrix& q = rep.mats.at(Generator::Q10);
    bool flipped = false;
    for (size_t i = 0; i < q.rows() && !flipped; ++i)
        for (size_t j = 0; j < q.cols() && !flipped; ++j)
            if (!q(i, j).is_zero()) {
                q(i, j) = -q(i, j);
                flipped = true;
            }
    REQUIRE(flipped);
    RelationReport r = verify_relations(rep);
    CHECK_FALSE(r.all_pass());
    bool nonzero_residual = false;
    for (const auto& res : r.results)
        nonzero_residual = nonzero_residual || (!res.pass && !res.residual.is_zero());
    CHECK(nonzero_residual);
}

TEST_CASE("grading violation reported") {
    MatrixRep rep = build_DE().rep;
    // H is even; an entry linking v1 to chi1 breaks the grading
    rep.mats.at(Generator::H)(build_DE().index_of("chi1"), build_DE().index_of("v1")) = RationalFunction(1);
    CHECK_FALSE(grading_violations(rep).empty());
}

TEST_CASE("graded Jacobi") {
    CHECK(check_jacobi(build_DE().rep, "D(E)").pass());
}

} // TEST_SUITE
