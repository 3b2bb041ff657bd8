#include <doctest.h>

#include "z2tk/induced_rep.hpp"

using namespace z2tk;

namespace {
const RationalFunction& entry(const InducedModule& m, Generator g, const char* row, const char* col) {
    return m.rep.at(g)(m.index_of(row), m.index_of(col));
}
} // namespace

TEST_SUITE("induced_rep") {

TEST_CASE("D(E,lambda) table entries") {
    const InducedModule& m = build_DEl();
    CHECK(m.dim() == 32);
    CHECK(entry(m, Generator::Z, "u5", "v1") == RationalFunction(1));
    CHECK(entry(m, Generator::Z, "v1", "u5") == RationalFunction::lambda());
    CHECK(is_zero_vector(m.rep.at(Generator::Q10).column(m.index_of("v5"))));
    CHECK(m.rep.at(Generator::H) == RepMatrix::identity(32).scaled(RationalFunction::E()));
}

TEST_CASE("D(E) restriction") {
    const InducedModule& m = build_DE();
    CHECK(m.dim() == 16);
    CHECK(m.rep.at(Generator::Z).is_zero());
    CHECK(m.rep.at(Generator::Q10d).column(m.index_of("u1")) == m.vector("2*E*sigma1 - sigma3"));
}

TEST_CASE("Casimir") {
    const InducedModule& del = build_DEl();
    RepMatrix c = casimir_eval(del);
    CHECK(c == RepMatrix::identity(32).scaled(RationalFunction::lambda()));
    for (size_t i = 0; i < 32; ++i)
        for (size_t j = 0; j < 32; ++j)
            CHECK(rf_specialize(c(i, j), 5, 3) == (i == j ? GaussianRational(3) : GaussianRational(0)));
    CHECK(casimir_eval(build_DE()).is_zero());
}

TEST_CASE("Z anticommutes with Q10 column by column") {
    for (const InducedModule* m : {&build_DEl(), &build_DE()}) {
        RepMatrix b = general_bracket(m->rep, Generator::Z, Generator::Q10);
        for (size_t j = 0; j < m->dim(); ++j)
            CHECK(is_zero_vector(b.column(j)));
    }
}

TEST_CASE("grading of every image") { CHECK(grading_violations(build_DEl().rep).empty()); }

// Regression constants: nonzero entries per generator after the verified build.
TEST_CASE("transcription checksum") {
    const std::map<Generator, size_t> del{{Generator::H, 32},   {Generator::Z, 32},   {Generator::Q10, 52},
                                          {Generator::Q10d, 44}, {Generator::Q01, 44}, {Generator::Q01d, 52}};
    const std::map<Generator, size_t> de{{Generator::H, 16},   {Generator::Z, 0},    {Generator::Q10, 16},
                                         {Generator::Q10d, 13}, {Generator::Q01, 13}, {Generator::Q01d, 16}};
    for (Generator g : kAllGenerators) {
        CAPTURE(name_of(g));
        CHECK(build_DEl().rep.at(g).nonzero_count() == del.at(g));
        CHECK(build_DE().rep.at(g).nonzero_count() == de.at(g));
    }
}

TEST_CASE("labels and vectors") {
    const InducedModule& m = build_DEl();
    CHECK(m.index_of("v1") == 0);
    CHECK(m.index_of("sigma8") == 31);
    CHECK_THROWS_AS(m.index_of("w1"), Error);
    auto v = m.vector("E^2*v1 - E*v2 - v4");
    CHECK(m.vector(m.describe(v)) == v);
}

} // TEST_SUITE
