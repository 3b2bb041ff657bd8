#pragma once

#include "z2tk/graded_core.hpp"

#include <map>
#include <string>
#include <vector>

namespace z2tk {

/// Generator images written over a block basis, e.g. images[Q10][2] == "E*v".
struct ActionTable {
    std::vector<std::string> basis_names;
    std::map<Generator, std::vector<std::string>> images;

    /// Column j of the matrix for g is the parsed image of basis vector j.
    RepMatrix matrix(Generator g) const;
};

/// One block of a published decomposition: basis vectors in ambient
/// coordinates plus the displayed action. "printed" keeps the text as
/// published, "corrected" the version that passes the exact checks.
struct BlockCatalog {
    std::string name;    ///< DE1..DE4, D1, D1t, D2, D2t
    std::string display; ///< Psi^(1), ...
    std::vector<std::string> basis_names;
    std::vector<std::string> printed_vectors;
    std::vector<std::string> corrected_vectors;
    ActionTable printed_table;
    ActionTable corrected_table;
};

/// Four blocks of D(E).
const std::vector<BlockCatalog>& catalog_DE();
/// Four blocks of D(E, lambda): two copies each of D^(1) and D^(2).
const std::vector<BlockCatalog>& catalog_DEl();

/// Four-dimensional irreps on lambda = E^2, in block coordinates of D1 / D2.
struct Irrep4Catalog {
    std::string name;   ///< Phi1 or Phi2
    std::string parent; ///< D1 or D2
    std::vector<std::string> basis_names;
    std::vector<std::string> vectors;      ///< over the parent block basis
    std::vector<std::string> scale;        ///< per-vector rescaling factor
    ActionTable unscaled_table;
    ActionTable rescaled_table;
};

const std::vector<Irrep4Catalog>& catalog_irrep4();

} // namespace z2tk
