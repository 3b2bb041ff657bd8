#pragma once

#include "z2tk/module_tools.hpp"
#include "z2tk/supermech.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace z2tk {

/// (1,2), (2,3), (3,-1) off the lambda = E^2 locus; (1,1), (2,4) on it.
const std::vector<Point>& default_panel();
bool on_locus(const Point& p);
/// The seed for which the four-dimensional subspace exists: c1 = 0 in D1, c2 = 0 in D2.
std::pair<GaussianRational, GaussianRational> locus_seed(const std::string& block);

/// Generator-derivation identities on the fields of the base system.
struct FieldIdentity {
    std::string identity; ///< e.g. "{Q10,Q10d} = H" or "Z^2 = -d^2/dt^2"
    std::string field;
    GradedPoly residual;
};

/// Every relation of the algebra with H = i d/dt, plus Z^2 f = -f'' on all 8 fields.
std::vector<FieldIdentity> operator_algebra_on_fields();

struct CriterionResult {
    int id = 0;
    std::string title;
    bool pass = false;
    std::string detail;
};

CriterionResult evaluate_criterion(int id);
std::vector<CriterionResult> evaluate_criteria();

nlohmann::json to_json(const CriterionResult& c);

} // namespace z2tk
