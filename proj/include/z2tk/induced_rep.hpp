#pragma once

#include "z2tk/graded_core.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace z2tk {

enum class Family { v, u, chi, sigma };

inline constexpr std::array<Family, 4> kAllFamilies{Family::v, Family::u, Family::chi, Family::sigma};

constexpr Degree degree_of(Family f) {
    switch (f) {
    case Family::v:
        return {0, 0};
    case Family::u:
        return {1, 1};
    case Family::chi:
        return {1, 0};
    case Family::sigma:
        return {0, 1};
    }
    return {};
}

std::string_view name_of(Family f);

struct BasisLabel {
    Family family;
    int index; ///< 1..8 (1..4 in D(E))

    Degree degree() const { return degree_of(family); }
    std::string to_string() const { return std::string(name_of(family)) + std::to_string(index); }
    friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

/// Basis ordering: v1..vN, u1..uN, chi1..chiN, sigma1..sigmaN with N = 8 or 4.
struct InducedModule {
    std::string name;
    int per_family = 8;
    std::vector<BasisLabel> labels;
    MatrixRep rep;

    size_t dim() const { return rep.dim; }
    /// Position of a label such as "chi3"; throws Error if absent.
    size_t index_of(std::string_view label) const;
    /// Coordinates of a linear combination like "E^2*v1 - E*v2 - v4".
    Vector<RationalFunction> vector(std::string_view expr) const;
    /// Inverse of vector(): readable linear combination.
    std::string describe(const Vector<RationalFunction>& v) const;
};

/// The 32-dimensional module D(E, lambda), straight from the transcribed generator tables.
const InducedModule& build_DEl();
/// The 16-dimensional module D(E): lambda = 0 and indices 5..8 dropped.
const InducedModule& build_DE();

/// Z*Z.
RepMatrix casimir_eval(const InducedModule& m);

/// Raw table entry, e.g. table_entry(Generator::Q10d, "u1") == "2*E*sigma1-sigma3+i*sigma5".
std::string_view table_entry(Generator g, std::string_view label);

} // namespace z2tk
