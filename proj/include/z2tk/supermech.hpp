#pragma once

#include "z2tk/graded_core.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include <json.hpp>

namespace z2tk {

enum class FieldName : std::uint8_t { x, z, psi, xi, F, y, A, a };
enum class ConstName : std::uint8_t { eps10, epsBar10, eps01, epsBar01, eps11, mu };

/// y and A are real: they have no barred partner.
constexpr bool is_real_field(FieldName f) { return f == FieldName::y || f == FieldName::A; }

class DerivativeCapError : public Error {
  public:
    using Error::Error;
};

/// Field variable (with bar and derivative order) or graded constant.
/// Ordering is the canonical factor order: constants first, then fields by
/// name, bar, derivative order.
struct Symbol {
    enum class Kind : std::uint8_t { constant, field };
    Kind kind = Kind::field;
    std::uint8_t name = 0;
    bool barred = false;
    std::uint8_t deriv = 0;

    static Symbol field(FieldName f, bool bar = false, unsigned d = 0);
    static Symbol constant(ConstName c);

    bool is_field() const { return kind == Kind::field; }
    FieldName field_name() const { return static_cast<FieldName>(name); }
    ConstName const_name() const { return static_cast<ConstName>(name); }
    Symbol base() const { return {kind, name, barred, 0}; }
    Symbol derived(unsigned k) const;
    Degree degree() const;
    /// Text form: dx, ddzbar, psibar, eps10, mu.
    std::string to_string() const;

    auto operator<=>(const Symbol&) const = default;
};

using Factors = std::vector<Symbol>;

/// Polynomial in graded-commutative symbols; each key is a canonically
/// ordered factor list and no coefficient is zero.
class GradedPoly {
  public:
    using Terms = std::map<Factors, GaussianRational>;

    GradedPoly() = default;
    GradedPoly(const GaussianRational& c);
    GradedPoly(long c) : GradedPoly(GaussianRational(c)) {}
    static GradedPoly of(const Symbol& s) { return monomial(1, {s}); }
    /// Normalizes the factor order first.
    static GradedPoly monomial(const GaussianRational& c, Factors f);

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    size_t size() const noexcept { return terms_.size(); }

    /// Adds an already canonical term.
    void add_canonical(const Factors& f, const GaussianRational& c);

    GradedPoly& operator+=(const GradedPoly& o);
    GradedPoly& operator-=(const GradedPoly& o);
    friend GradedPoly operator+(GradedPoly a, const GradedPoly& b) { return a += b; }
    friend GradedPoly operator-(GradedPoly a, const GradedPoly& b) { return a -= b; }
    friend GradedPoly operator*(const GradedPoly& a, const GradedPoly& b);
    GradedPoly operator-() const { return scaled(-1); }
    GradedPoly scaled(const GaussianRational& c) const;
    friend bool operator==(const GradedPoly&, const GradedPoly&) = default;

    /// Degree if every term has the same one (zero polynomial: (0,0)).
    std::optional<Degree> degree() const;
    /// Canonical text, e.g. "2*i*mu*dx*ddzbar - psibar*dpsi".
    std::string to_string() const;

  private:
    Terms terms_;
};

struct NormalizedMonomial {
    GaussianRational coeff; ///< zero if a nilpotent symbol repeats
    Factors factors;
};

/// Sorts factors into canonical order, multiplying by swap signs. With rng,
/// adjacent out-of-order pairs are swapped in random order instead of a
/// left-to-right bubble sort; the result must not depend on that choice.
NormalizedMonomial normalize(GaussianRational coeff, Factors factors, std::mt19937* rng = nullptr);

GradedPoly canonical_product(const GradedPoly& a, const GradedPoly& b);
/// Antilinear involution: bars toggled, eps <-> epsBar, factor order reversed.
GradedPoly conjugate(const GradedPoly& p);
GradedPoly time_derivative(const GradedPoly& p, unsigned order = 1);
/// Removes q after moving it to the left (summed over occurrences).
GradedPoly left_derivative(const GradedPoly& p, const Symbol& q);
/// Sum of monomials whose leftmost factor is c, with c removed.
GradedPoly strip_constant(const GradedPoly& p, ConstName c);
/// Field symbols (derivative order 0) occurring in p.
std::vector<Symbol> field_bases(const GradedPoly& p);

/// Highest derivative order allowed; defaults to 6 or Z2TK_DERIV_CAP.
unsigned derivative_cap();
void set_derivative_cap(unsigned cap);

/// Images of the order-0 fields; extended to derivatives by commuting with
/// d/dt and to products as a graded derivation of the given degree.
struct VariationRule {
    std::string label;
    Degree degree;
    std::map<Symbol, GradedPoly> images;
};

GradedPoly apply_rule(const VariationRule& r, const GradedPoly& p);

enum class Delta { d10, d01, d11 };
inline constexpr std::array<Delta, 3> kAllDeltas{Delta::d10, Delta::d01, Delta::d11};
std::string_view name_of(Delta d);

/// Choice of dynamical variables with the rules rewritten in terms of them.
struct VariableSystem {
    std::string name;
    std::vector<Symbol> fields; ///< order-0 symbols
    std::map<Delta, VariationRule> deltas;
    /// Rewrites a polynomial in x, z, psi, xi (and bars) into this system.
    std::function<GradedPoly(const GradedPoly&)> rewrite;
    /// Definitions of the new variables in terms of the original ones.
    std::vector<std::pair<Symbol, GradedPoly>> definitions;
};

/// x, z, psi, xi and bars.
const VariableSystem& base_system();
/// "x,z" (base), "x,F", "y,A,F", "y,A,z", "a,z".
const VariableSystem& variable_system(const std::string& name);

GradedPoly apply_delta(Delta d, const GradedPoly& p, const VariableSystem& sys = base_system());
/// Parameter-free derivation for Q10, Q10d, Q01, Q01d, Z; H acts as i*d/dt.
VariationRule generator_rule(Generator g, const VariableSystem& sys = base_system());
GradedPoly apply_generator(Generator g, const GradedPoly& p, const VariableSystem& sys = base_system());

/// The same rules read off the rescaled four-dimensional tables with E -> i d/dt.
VariationRule generator_rule_from_tables(Generator g);

struct Lagrangian {
    std::string name;
    GradedPoly expr;
    const VariableSystem* system = nullptr;
};

/// L = Z Q10d Q10 Q01d Q01 g (rightmost applied first).
GradedPoly build_action1(const GradedPoly& g);

struct TotalDerivative {
    bool is_total = false;
    std::optional<GradedPoly> witness; ///< d/dt witness == p, verified
};

TotalDerivative is_total_derivative(const GradedPoly& p);

GradedPoly euler_lagrange(const GradedPoly& L, const Symbol& q);

/// Eliminates each listed variable through an algebraic Euler-Lagrange equation.
GradedPoly substitute_eom(const GradedPoly& p, const Lagrangian& L, const std::vector<Symbol>& vars);

struct NoetherCharge {
    Generator gen;
    GradedPoly charge;
    bool conserved = false; ///< d/dt charge vanishes modulo the EL equations
};

struct VariationCheck {
    Delta delta;
    GradedPoly variation;
    TotalDerivative invariance;
};

struct NoetherSet {
    std::vector<VariationCheck> variations;
    std::vector<NoetherCharge> charges; ///< Q10, Q10d, Q01, Q01d, Z
    bool invariant() const;
    const NoetherCharge& charge(Generator g) const;
};

NoetherSet noether_charges(const Lagrangian& L);

/// c with a == c*b and c != 0; for two zero polynomials c = 1.
std::optional<GaussianRational> proportionality(const GradedPoly& a, const GradedPoly& b);

/// Parses text such as "2*i*mu*dx*ddzbar - i*(psibar*dpsi)". Factor order is kept.
GradedPoly parse_graded_poly(std::string_view text);

nlohmann::json to_json(const GradedPoly& p);

} // namespace z2tk
