#pragma once

#include "z2tk/supermech.hpp"

#include <optional>
#include <string>
#include <vector>

namespace z2tk {

/// L0..L4 and Lg (= build_action1(mu*x*xbar)).
const std::vector<std::string>& catalogue_names();
const Lagrangian& catalogue(const std::string& name);

/// The printed higher-derivative Lagrangian for g = mu*x*xbar.
const GradedPoly& action1_display();

/// Printed charges for one free Lagrangian, with the variables eliminated
/// on shell and whether Z is expected to vanish there.
struct PrintedChargeSet {
    std::string lagrangian;
    std::vector<Symbol> on_shell;
    std::map<Generator, GradedPoly> charges;
    bool z_vanishes = false;
};

const PrintedChargeSet& printed_charges(const std::string& name);

struct ChargeFinding {
    Generator gen;
    GradedPoly computed;
    GradedPoly reduced; ///< after substitute_eom with the catalogued variables
    GradedPoly printed;
    std::optional<GaussianRational> factor; ///< computed == factor * printed
    bool conserved = false;
    bool degree_ok = false;
};

struct MechanicsReport {
    std::string name;
    std::string system;
    std::vector<std::string> variables;
    GradedPoly lagrangian;
    bool real_mod_total_derivative = false;
    std::vector<VariationCheck> variations;
    std::vector<std::pair<Symbol, GradedPoly>> equations; ///< Euler-Lagrange expression per variable
    std::vector<Symbol> eliminated;
    std::vector<ChargeFinding> charges;
    bool conjugation_pairs = false; ///< conj(Q10) ~ Q10d and conj(Q01) ~ Q01d
    bool z_vanishes = false;        ///< reduced Z == 0
    bool z_expected_to_vanish = false;

    bool invariant() const;
    bool charges_match() const;
    bool ok() const;
};

MechanicsReport analyze_lagrangian(const std::string& name);

struct Action1Report {
    GradedPoly g;
    GradedPoly lagrangian;
    bool real_mod_total_derivative = false;
    std::vector<VariationCheck> variations;
    /// Only for g = mu*x*xbar: difference to the printed display.
    std::optional<GradedPoly> display;
    std::optional<TotalDerivative> display_difference;

    bool invariant() const;
    bool matches_display() const { return display_difference && display_difference->is_total; }
};

Action1Report analyze_action1(const GradedPoly& g);

/// Q10 L against -i d/dt(Z Q01d Q01 g) as printed, and against the version
/// with the Q10 that the degree count requires.
struct HigherDerivativeIdentity {
    GradedPoly lhs;
    GradedPoly literal_rhs;
    GradedPoly corrected_rhs;
    std::optional<Degree> lhs_degree;
    std::optional<Degree> literal_degree;
    bool literal_holds = false;
    bool corrected_holds = false;
};

HigherDerivativeIdentity higher_derivative_identity(const GradedPoly& g);

} // namespace z2tk
