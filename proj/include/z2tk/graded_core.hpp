#pragma once

#include "z2tk/exact_arith.hpp"
#include "z2tk/matrix.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace z2tk {

/// Element (a, b) of Z2 x Z2.
struct Degree {
    unsigned a = 0;
    unsigned b = 0;

    constexpr Degree() = default;
    constexpr Degree(unsigned a_, unsigned b_) : a(a_ & 1u), b(b_ & 1u) {}

    friend constexpr Degree operator+(Degree x, Degree y) { return {x.a ^ y.a, x.b ^ y.b}; }
    friend constexpr bool operator==(Degree x, Degree y) { return x.a == y.a && x.b == y.b; }
    /// Inner product mod 2.
    friend constexpr unsigned dot(Degree x, Degree y) { return (x.a & y.a) ^ (x.b & y.b); }
    constexpr unsigned index() const { return 2u * a + b; }
    std::string to_string() const;
};

inline constexpr std::array<Degree, 4> kAllDegrees{Degree{0, 0}, Degree{1, 1}, Degree{1, 0}, Degree{0, 1}};

/// (-1)^(d1 . d2): the factor in x*y = sign * y*x for homogeneous elements.
constexpr int swap_sign(Degree d1, Degree d2) { return dot(d1, d2) ? -1 : 1; }

enum class Generator { H, Z, Q10, Q10d, Q01, Q01d };

inline constexpr std::array<Generator, 6> kAllGenerators{Generator::H,   Generator::Z,   Generator::Q10,
                                                         Generator::Q10d, Generator::Q01, Generator::Q01d};

constexpr Degree degree_of(Generator g) {
    switch (g) {
    case Generator::H:
        return {0, 0};
    case Generator::Z:
        return {1, 1};
    case Generator::Q10:
    case Generator::Q10d:
        return {1, 0};
    case Generator::Q01:
    case Generator::Q01d:
        return {0, 1};
    }
    return {};
}

std::string_view name_of(Generator g);
std::optional<Generator> generator_from_name(std::string_view s);

/// Formal linear combination of generators (and the identity, when gen is empty).
struct RhsTerm {
    std::optional<Generator> gen;
    RationalFunction coeff;
};

struct BracketRelation {
    Generator left;
    Generator right;
    std::vector<RhsTerm> rhs; ///< empty means zero

    /// Commutator or anticommutator; always derived from the degrees.
    bool is_anticommutator() const { return swap_sign(degree_of(left), degree_of(right)) < 0; }
    std::string to_string() const;
};

/// The defining relations of the algebra, in a fixed canonical order (21 entries).
const std::vector<BracketRelation>& relation_list();

using RepMatrix = Matrix<RationalFunction>;

/// Matrix representation on a graded vector space.
struct MatrixRep {
    size_t dim = 0;
    std::vector<Degree> basis_degrees;
    std::vector<std::string> basis_names;
    std::map<Generator, RepMatrix> mats;

    const RepMatrix& at(Generator g) const;
};

/// M1*M2 - swap_sign(deg1, deg2) * M2*M1.
RepMatrix general_bracket(const MatrixRep& rep, Generator g1, Generator g2);

struct GradingViolation {
    Generator gen;
    size_t row;
    size_t col;
    RationalFunction entry;
};

/// Entries of each generator matrix that map a degree-d vector outside degree d + deg(g).
std::vector<GradingViolation> grading_violations(const MatrixRep& rep);

struct RelationResult {
    BracketRelation relation;
    bool pass = false;
    RepMatrix residual;
};

struct RelationReport {
    std::vector<GradingViolation> grading;
    std::vector<RelationResult> results;

    bool grading_ok() const { return grading.empty(); }
    bool all_pass() const;
    size_t pass_count() const;
};

RelationReport verify_relations(const MatrixRep& rep);

/// Graded Jacobi residual for a homogeneous triple of generators.
RepMatrix jacobi_residual(const MatrixRep& rep, Generator a, Generator b, Generator c);

nlohmann::json to_json(const RelationReport& report);
/// Nonzero entries as [[row, col, value], ...].
nlohmann::json sparse_entries_json(const RepMatrix& m);

} // namespace z2tk
