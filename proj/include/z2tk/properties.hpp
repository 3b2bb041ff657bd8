#pragma once

#include "z2tk/graded_core.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace z2tk {

/// Outcome of one randomized property run; seeds are fixed so reruns agree.
struct PropertyResult {
    std::string name;
    size_t cases = 0;
    size_t failures = 0;
    std::string first_failure;

    bool pass() const { return cases > 0 && failures == 0; }
};

/// Bubble-sort normalization against random adjacent-swap orders.
PropertyResult check_confluence(size_t cases, std::uint32_t seed = 11);
/// Swap factors of canonical_product against swap_sign for all 16 degree pairs.
PropertyResult check_sign_table();
/// g(f h) == g(f) h + swap_sign(deg g, deg f) f g(h) for generators and deltas.
PropertyResult check_leibniz(size_t cases, std::uint32_t seed = 23);
/// conjugate(conjugate(p)) == p.
PropertyResult check_conjugation_involution(size_t cases, std::uint32_t seed = 37);
/// Field axioms on random rational functions in E and lambda.
PropertyResult check_field_axioms(size_t cases, std::uint32_t seed = 41);
/// specialize(a*b) and specialize(a+b) at random points where both sides are defined.
PropertyResult check_specialize_homomorphism(size_t cases, std::uint32_t seed = 43);
/// Graded Jacobi identity for every unordered generator triple.
PropertyResult check_jacobi(const MatrixRep& rep, const std::string& label);
/// d/dt commutes with every generator and every delta on all fields.
PropertyResult check_time_derivative_commutes();

/// Everything the acceptance run needs, at the sizes it asks for.
std::vector<PropertyResult> property_suite();

} // namespace z2tk
