#pragma once

#include "z2tk/induced_rep.hpp"
#include "z2tk/printed_tables.hpp"

#include <optional>
#include <string>
#include <vector>

namespace z2tk {

/// A specialization point (E0, lambda0).
struct Point {
    GaussianRational E0;
    GaussianRational L0;
    std::string to_string() const;
};

using SymbolicSubspace = Echelon<RationalFunction>;
using NumericSubspace = Echelon<GaussianRational>;

/// The five non-scalar generator matrices (H is E times the identity everywhere).
std::vector<RepMatrix> action_matrices(const MatrixRep& rep);

SymbolicSubspace rref_symbolic(const std::vector<Vector<RationalFunction>>& vectors, size_t dim);
/// Specializes every vector first; throws PoleError.
NumericSubspace rref_specialized(const std::vector<Vector<RationalFunction>>& vectors, size_t dim, const Point& p);

/// Smallest subspace containing the seeds and stable under every matrix.
template <class T>
Echelon<T> closure(const std::vector<Matrix<T>>& gens, const std::vector<Vector<T>>& seeds, size_t dim) {
    Echelon<T> e;
    e.ambient_dim = dim;
    std::vector<Vector<T>> queue;
    for (const auto& s : seeds)
        if (e.insert(s))
            queue.push_back(s);
    while (!queue.empty()) {
        Vector<T> v = std::move(queue.back());
        queue.pop_back();
        for (const auto& g : gens) {
            Vector<T> w = g * v;
            if (e.insert(w))
                queue.push_back(std::move(w));
        }
    }
    return e;
}

SymbolicSubspace submodule_closure(const MatrixRep& rep, const std::vector<Vector<RationalFunction>>& seeds);
NumericSubspace submodule_closure(const MatrixRep& rep, const std::vector<Vector<RationalFunction>>& seeds,
                                  const Point& p);

/// Coordinates of a linear combination over arbitrary basis names.
Vector<RationalFunction> parse_vector(const std::vector<std::string>& names, std::string_view expr);
std::string describe_vector(const std::vector<std::string>& names, const Vector<RationalFunction>& v);
std::string describe_vector(const std::vector<std::string>& names, const Vector<GaussianRational>& v);

struct TableDiff {
    Generator gen;
    std::string column;   ///< block basis name
    std::string printed;  ///< as displayed
    std::string computed; ///< regenerated from the ambient matrices
    bool matches_corrected = false;
    std::string corrected;
};

struct IrrepReport {
    std::string block;
    std::string display;
    size_t dim = 0;
    bool basis_independent = false;
    bool closure_passed = false;
    size_t residual_nonzero = 0; ///< entries of M B - B X that do not vanish
    MatrixRep rep;               ///< regenerated block action (valid when closure_passed)
    std::map<Generator, std::vector<std::string>> action_table;
    bool matches_printed = false;
    bool matches_corrected = false;
    std::vector<TableDiff> diffs;
    bool relations_pass = false;
};

/// Conjugates the ambient action into span(vectors) and diffs it against the tables.
/// Either table may be null. generic is a pole-free point used only to pick rows.
IrrepReport change_of_basis(const MatrixRep& ambient, const std::string& block, const std::string& display,
                            const std::vector<std::string>& names, const std::vector<Vector<RationalFunction>>& vectors,
                            const ActionTable* printed, const ActionTable* corrected, const Point& generic);

struct BasisErratum {
    std::string block;
    std::string vector;
    std::string printed;
    std::string corrected;
};

struct MisprintFinding {
    std::string block;
    Point point;
    size_t hom_dim = 0;
    std::vector<std::string> mismatched; ///< basis names whose printed vector is not in the fitted hom
    bool agrees_with_catalog = false;   ///< mismatched == catalogued basis errata
};

struct DecompositionReport {
    std::string rep;
    size_t ambient_dim = 0;
    size_t rank = 0;          ///< symbolic rank of all corrected basis vectors
    size_t printed_rank = 0;  ///< same for the printed vectors
    std::vector<IrrepReport> blocks;          ///< corrected bases
    std::vector<IrrepReport> printed_blocks;  ///< printed bases, only where they differ
    std::vector<BasisErratum> basis_errata;
    std::vector<MisprintFinding> locator;

    bool spans() const { return rank == ambient_dim; }
    bool all_closed() const;
    bool all_relations_pass() const;
};

DecompositionReport decompose(const InducedModule& m, const std::vector<BlockCatalog>& catalog);
/// Cached decompositions of D(E) and D(E, lambda).
const DecompositionReport& decomposition_DE();
const DecompositionReport& decomposition_DEl();
/// Regenerated block representation by name (DE1..DE4, D1, D1t, D2, D2t).
const MatrixRep& block_rep(const std::string& name);

/// Degree-preserving T (dst x src) with T X_src = X_dst T for every generator.
std::vector<Matrix<GaussianRational>> hom_space(const MatrixRep& src, const MatrixRep& dst, const Point& p);

struct IntertwinerReport {
    size_t dim = 0;
    bool has_invertible = false;
    bool contains_identity = false;
};

IntertwinerReport intertwiner(const MatrixRep& a, const MatrixRep& b, const Point& p);
inline size_t intertwiner_dim(const MatrixRep& a, const MatrixRep& b, const Point& p) {
    return intertwiner(a, b, p).dim;
}

/// Fits the hom space (corrected table -> ambient) to the printed vectors at p
/// and reports which printed vectors lie outside the best fit.
MisprintFinding locate_misprints(const InducedModule& m, const BlockCatalog& b, const Point& p);

struct ProbeReport {
    std::string block;
    Point point;
    GaussianRational c1, c2;
    size_t closure_dim = 0;
    std::vector<std::pair<std::string, std::string>> witnesses; ///< degree-(1,0) images, block coordinates
    bool witnesses_proportional = false;
    std::vector<std::string> invariant_basis; ///< echelon rows, when closure_dim == 4
};

/// Closure of c1*v1 + c2*v2 of block D1 or D2 inside D(E, lambda) at p.
/// Rejects E0 = 0 (the rescaled basis has a pole there) and unknown blocks.
ProbeReport invariant_subspace_probe(const std::string& block, const Point& p, const GaussianRational& c1,
                                     const GaussianRational& c2);

/// Four-dimensional irrep on lambda = E^2 from block D1 (Phi1) or D2 (Phi2).
IrrepReport extract_irrep_4d(const std::string& name, bool rescaled);

} // namespace z2tk
