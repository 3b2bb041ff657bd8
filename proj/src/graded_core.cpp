#include "z2tk/graded_core.hpp"

#include <algorithm>

namespace z2tk {

std::string Degree::to_string() const { return "(" + std::to_string(a) + "," + std::to_string(b) + ")"; }

std::string_view name_of(Generator g) {
    switch (g) {
    case Generator::H:
        return "H";
    case Generator::Z:
        return "Z";
    case Generator::Q10:
        return "Q10";
    case Generator::Q10d:
        return "Q10d";
    case Generator::Q01:
        return "Q01";
    case Generator::Q01d:
        return "Q01d";
    }
    return "?";
}

std::optional<Generator> generator_from_name(std::string_view s) {
    for (Generator g : kAllGenerators)
        if (name_of(g) == s)
            return g;
    return std::nullopt;
}

std::string BracketRelation::to_string() const {
    std::string lhs = is_anticommutator() ? "{" : "[";
    lhs += std::string(name_of(left)) + "," + std::string(name_of(right));
    lhs += is_anticommutator() ? "}" : "]";
    std::string r;
    for (const auto& t : rhs) {
        if (!r.empty())
            r += " + ";
        std::string c = t.coeff == RationalFunction(1) ? "" : t.coeff.to_string() + "*";
        r += c + (t.gen ? std::string(name_of(*t.gen)) : std::string("Id"));
    }
    return lhs + " = " + (r.empty() ? "0" : r);
}

const std::vector<BracketRelation>& relation_list() {
    static const std::vector<BracketRelation> relations = [] {
        using G = Generator;
        const RhsTerm h{G::H, RationalFunction(1)};
        const RhsTerm iz{G::Z, RationalFunction::i()};
        std::vector<BracketRelation> r;
        // nilpotency
        r.push_back({G::Q10, G::Q10, {}});
        r.push_back({G::Q01, G::Q01, {}});
        r.push_back({G::Q10d, G::Q10d, {}});
        r.push_back({G::Q01d, G::Q01d, {}});
        // Z anticommutes with the supercharges
        r.push_back({G::Z, G::Q10, {}});
        r.push_back({G::Z, G::Q10d, {}});
        r.push_back({G::Z, G::Q01, {}});
        r.push_back({G::Z, G::Q01d, {}});
        r.push_back({G::Q10, G::Q10d, {h}});
        r.push_back({G::Q01, G::Q01d, {h}});
        r.push_back({G::Q01, G::Q10d, {iz}});
        r.push_back({G::Q01d, G::Q10, {iz}});
        r.push_back({G::Q10, G::Q01, {}});
        r.push_back({G::Q10d, G::Q01d, {}});
        // H is central
        for (G g : {G::Z, G::Q10, G::Q10d, G::Q01, G::Q01d, G::H})
            r.push_back({G::H, g, {}});
        r.push_back({G::Z, G::Z, {}});
        return r;
    }();
    return relations;
}

const RepMatrix& MatrixRep::at(Generator g) const {
    auto it = mats.find(g);
    if (it == mats.end())
        throw Error("representation has no matrix for generator " + std::string(name_of(g)));
    return it->second;
}

RepMatrix general_bracket(const MatrixRep& rep, Generator g1, Generator g2) {
    const RepMatrix& m1 = rep.at(g1);
    const RepMatrix& m2 = rep.at(g2);
    RepMatrix r = m1 * m2;
    if (swap_sign(degree_of(g1), degree_of(g2)) > 0)
        r -= m2 * m1;
    else
        r += m2 * m1;
    return r;
}

std::vector<GradingViolation> grading_violations(const MatrixRep& rep) {
    std::vector<GradingViolation> out;
    if (rep.basis_degrees.size() != rep.dim)
        throw Error("basis degree list does not match the dimension");
    for (const auto& [g, m] : rep.mats) {
        if (m.rows() != rep.dim || m.cols() != rep.dim)
            throw Error("generator matrix " + std::string(name_of(g)) + " has the wrong shape");
        for (size_t i = 0; i < rep.dim; ++i)
            for (size_t j = 0; j < rep.dim; ++j)
                if (!m(i, j).is_zero() && rep.basis_degrees[i] != rep.basis_degrees[j] + degree_of(g))
                    out.push_back({g, i, j, m(i, j)});
    }
    return out;
}

bool RelationReport::all_pass() const {
    return grading_ok() && !results.empty() &&
           std::all_of(results.begin(), results.end(), [](const RelationResult& r) { return r.pass; });
}

size_t RelationReport::pass_count() const {
    return static_cast<size_t>(
        std::count_if(results.begin(), results.end(), [](const RelationResult& r) { return r.pass; }));
}

RelationReport verify_relations(const MatrixRep& rep) {
    RelationReport report;
    report.grading = grading_violations(rep);
    if (!report.grading.empty())
        return report;
    for (const BracketRelation& rel : relation_list()) {
        RepMatrix residual = general_bracket(rep, rel.left, rel.right);
        for (const RhsTerm& t : rel.rhs) {
            if (t.gen)
                residual -= rep.at(*t.gen).scaled(t.coeff);
            else
                residual -= RepMatrix::identity(rep.dim).scaled(t.coeff);
        }
        bool pass = residual.is_zero();
        report.results.push_back({rel, pass, std::move(residual)});
    }
    return report;
}

namespace {

RepMatrix bracket_matrices(const RepMatrix& x, Degree dx, const RepMatrix& y, Degree dy) {
    RepMatrix r = x * y;
    if (swap_sign(dx, dy) > 0)
        r -= y * x;
    else
        r += y * x;
    return r;
}

RepMatrix signed_term(RepMatrix m, int sign) { return sign > 0 ? m : m.scaled(RationalFunction(-1)); }

} // namespace

RepMatrix jacobi_residual(const MatrixRep& rep, Generator a, Generator b, Generator c) {
    // (-1)^(c.a) [a,[b,c]] + (-1)^(a.b) [b,[c,a]] + (-1)^(b.c) [c,[a,b]] = 0
    Degree da = degree_of(a), db = degree_of(b), dc = degree_of(c);
    const RepMatrix &ma = rep.at(a), &mb = rep.at(b), &mc = rep.at(c);
    RepMatrix t1 = bracket_matrices(ma, da, bracket_matrices(mb, db, mc, dc), db + dc);
    RepMatrix t2 = bracket_matrices(mb, db, bracket_matrices(mc, dc, ma, da), dc + da);
    RepMatrix t3 = bracket_matrices(mc, dc, bracket_matrices(ma, da, mb, db), da + db);
    return signed_term(t1, swap_sign(dc, da)) + signed_term(t2, swap_sign(da, db)) +
           signed_term(t3, swap_sign(db, dc));
}

nlohmann::json sparse_entries_json(const RepMatrix& m) {
    nlohmann::json out = nlohmann::json::array();
    for (size_t i = 0; i < m.rows(); ++i)
        for (size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_zero())
                out.push_back(nlohmann::json::array({i, j, to_json(m(i, j))}));
    return out;
}

nlohmann::json to_json(const RelationReport& report) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : report.results)
        out.push_back({{"relation", r.relation.to_string()},
                       {"pass", r.pass},
                       {"residual_nonzero_entries", sparse_entries_json(r.residual)}});
    return out;
}

} // namespace z2tk
