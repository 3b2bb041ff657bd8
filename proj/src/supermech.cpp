#include "z2tk/supermech.hpp"

#include "z2tk/expr_parser.hpp"
#include "z2tk/printed_tables.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <cstdlib>

namespace z2tk {

// ---------------------------------------------------------------------------
// symbols

namespace {

constexpr const char* kFieldNames[] = {"x", "z", "psi", "xi", "F", "y", "A", "a"};
constexpr const char* kConstNames[] = {"eps10", "epsBar10", "eps01", "epsBar01", "eps11", "mu"};

unsigned initial_cap() {
    if (const char* env = std::getenv("Z2TK_DERIV_CAP")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v > 0 && v < 64)
            return static_cast<unsigned>(v);
    }
    return 6;
}

std::atomic<unsigned>& cap_ref() {
    static std::atomic<unsigned> cap{initial_cap()};
    return cap;
}

} // namespace

unsigned derivative_cap() { return cap_ref().load(); }
void set_derivative_cap(unsigned cap) { cap_ref().store(cap); }

Symbol Symbol::field(FieldName f, bool bar, unsigned d) {
    if (bar && is_real_field(f))
        throw Error(std::string(kFieldNames[static_cast<int>(f)]) + " is real and has no barred form");
    Symbol s{Kind::field, static_cast<std::uint8_t>(f), bar, 0};
    return s.derived(d);
}

Symbol Symbol::constant(ConstName c) { return {Kind::constant, static_cast<std::uint8_t>(c), false, 0}; }

Symbol Symbol::derived(unsigned k) const {
    if (!is_field())
        throw Error("constants have no time derivative");
    unsigned d = deriv + k;
    if (d > derivative_cap())
        throw DerivativeCapError("derivative order " + std::to_string(d) + " of " + base().to_string() +
                                 " exceeds the cap " + std::to_string(derivative_cap()));
    Symbol s = *this;
    s.deriv = static_cast<std::uint8_t>(d);
    return s;
}

Degree Symbol::degree() const {
    if (is_field()) {
        switch (field_name()) {
        case FieldName::x:
        case FieldName::y:
        case FieldName::A:
        case FieldName::a:
            return {0, 0};
        case FieldName::z:
        case FieldName::F:
            return {1, 1};
        case FieldName::psi:
            return {1, 0};
        case FieldName::xi:
            return {0, 1};
        }
    }
    switch (const_name()) {
    case ConstName::eps10:
    case ConstName::epsBar10:
        return {1, 0};
    case ConstName::eps01:
    case ConstName::epsBar01:
        return {0, 1};
    case ConstName::eps11:
    case ConstName::mu:
        return {1, 1};
    }
    return {};
}

std::string Symbol::to_string() const {
    if (!is_field())
        return kConstNames[name];
    return std::string(deriv, 'd') + kFieldNames[name] + (barred ? "bar" : "");
}

namespace {

Degree degree_of(const Factors& f, size_t upto) {
    Degree d;
    for (size_t k = 0; k < upto; ++k)
        d = d + f[k].degree();
    return d;
}

bool odd_self(const Symbol& s) { return dot(s.degree(), s.degree()) != 0; }

} // namespace

// ---------------------------------------------------------------------------
// normal ordering

NormalizedMonomial normalize(GaussianRational coeff, Factors f, std::mt19937* rng) {
    const size_t n = f.size();
    auto swap_at = [&](size_t j) {
        if (swap_sign(f[j].degree(), f[j + 1].degree()) < 0)
            coeff = -coeff;
        std::swap(f[j], f[j + 1]);
    };
    if (!rng) {
        for (size_t pass = 0; pass + 1 < n; ++pass) {
            bool any = false;
            for (size_t j = 0; j + 1 < n - pass; ++j)
                if (f[j + 1] < f[j]) {
                    swap_at(j);
                    any = true;
                }
            if (!any)
                break;
        }
    } else {
        std::vector<size_t> out_of_order;
        for (;;) {
            out_of_order.clear();
            for (size_t j = 0; j + 1 < n; ++j)
                if (f[j + 1] < f[j])
                    out_of_order.push_back(j);
            if (out_of_order.empty())
                break;
            std::uniform_int_distribution<size_t> pick(0, out_of_order.size() - 1);
            swap_at(out_of_order[pick(*rng)]);
        }
    }
    for (size_t j = 0; j + 1 < n; ++j)
        if (f[j] == f[j + 1] && odd_self(f[j]))
            return {GaussianRational(0), {}};
    return {coeff, std::move(f)};
}

GradedPoly::GradedPoly(const GaussianRational& c) {
    if (!c.is_zero())
        terms_.emplace(Factors{}, c);
}

GradedPoly GradedPoly::monomial(const GaussianRational& c, Factors f) {
    GradedPoly p;
    NormalizedMonomial m = normalize(c, std::move(f));
    p.add_canonical(m.factors, m.coeff);
    return p;
}

void GradedPoly::add_canonical(const Factors& f, const GaussianRational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(f, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

GradedPoly& GradedPoly::operator+=(const GradedPoly& o) {
    for (const auto& [f, c] : o.terms_)
        add_canonical(f, c);
    return *this;
}

GradedPoly& GradedPoly::operator-=(const GradedPoly& o) {
    for (const auto& [f, c] : o.terms_)
        add_canonical(f, -c);
    return *this;
}

GradedPoly operator*(const GradedPoly& a, const GradedPoly& b) {
    GradedPoly r;
    for (const auto& [fa, ca] : a.terms_)
        for (const auto& [fb, cb] : b.terms_) {
            Factors f = fa;
            f.insert(f.end(), fb.begin(), fb.end());
            NormalizedMonomial m = normalize(ca * cb, std::move(f));
            r.add_canonical(m.factors, m.coeff);
        }
    return r;
}

GradedPoly GradedPoly::scaled(const GaussianRational& c) const {
    GradedPoly r;
    if (c.is_zero())
        return r;
    for (const auto& [f, x] : terms_)
        r.terms_.emplace(f, x * c);
    return r;
}

std::optional<Degree> GradedPoly::degree() const {
    std::optional<Degree> d;
    for (const auto& [f, c] : terms_) {
        Degree t = degree_of(f, f.size());
        if (d && !(*d == t))
            return std::nullopt;
        d = t;
    }
    return d ? d : Degree{};
}

std::string GradedPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::string out;
    for (const auto& [f, c] : terms_) {
        std::string cs = c.to_string();
        std::string term;
        if (f.empty())
            term = cs;
        else {
            if (cs == "-1")
                term = "-";
            else if (cs != "1")
                term = (cs.find_first_of("+-", 1) != std::string::npos ? "(" + cs + ")" : cs) + "*";
            for (size_t k = 0; k < f.size(); ++k)
                term += (k ? "*" : "") + f[k].to_string();
        }
        if (out.empty())
            out = term;
        else if (term[0] == '-')
            out += " - " + term.substr(1);
        else
            out += " + " + term;
    }
    return out;
}

GradedPoly canonical_product(const GradedPoly& a, const GradedPoly& b) { return a * b; }

GradedPoly conjugate(const GradedPoly& p) {
    GradedPoly r;
    for (const auto& [f, c] : p.terms()) {
        Factors g;
        for (auto it = f.rbegin(); it != f.rend(); ++it) {
            Symbol s = *it;
            if (s.is_field()) {
                if (!is_real_field(s.field_name()))
                    s.barred = !s.barred;
            } else {
                switch (s.const_name()) {
                case ConstName::eps10:
                    s = Symbol::constant(ConstName::epsBar10);
                    break;
                case ConstName::epsBar10:
                    s = Symbol::constant(ConstName::eps10);
                    break;
                case ConstName::eps01:
                    s = Symbol::constant(ConstName::epsBar01);
                    break;
                case ConstName::epsBar01:
                    s = Symbol::constant(ConstName::eps01);
                    break;
                default:
                    break;
                }
            }
            g.push_back(s);
        }
        r += GradedPoly::monomial(c.conj(), std::move(g));
    }
    return r;
}

GradedPoly time_derivative(const GradedPoly& p, unsigned order) {
    GradedPoly cur = p;
    for (unsigned k = 0; k < order; ++k) {
        GradedPoly next;
        for (const auto& [f, c] : cur.terms())
            for (size_t j = 0; j < f.size(); ++j) {
                if (!f[j].is_field())
                    continue;
                Factors g = f;
                g[j] = g[j].derived(1);
                next += GradedPoly::monomial(c, std::move(g));
            }
        cur = std::move(next);
    }
    return cur;
}

GradedPoly left_derivative(const GradedPoly& p, const Symbol& q) {
    GradedPoly r;
    const Degree dq = q.degree();
    for (const auto& [f, c] : p.terms()) {
        int sign = 1;
        for (size_t k = 0; k < f.size(); ++k) {
            if (f[k] == q) {
                Factors g = f;
                g.erase(g.begin() + static_cast<std::ptrdiff_t>(k));
                r.add_canonical(g, sign > 0 ? c : -c);
            }
            sign *= swap_sign(dq, f[k].degree());
        }
    }
    return r;
}

GradedPoly strip_constant(const GradedPoly& p, ConstName c) { return left_derivative(p, Symbol::constant(c)); }

std::vector<Symbol> field_bases(const GradedPoly& p) {
    std::vector<Symbol> out;
    for (const auto& [f, c] : p.terms())
        for (const auto& s : f)
            if (s.is_field())
                out.push_back(s.base());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace {

unsigned max_order(const GradedPoly& p, const Symbol& base) {
    unsigned m = 0;
    bool seen = false;
    for (const auto& [f, c] : p.terms())
        for (const auto& s : f)
            if (s.is_field() && s.base() == base) {
                m = std::max<unsigned>(m, s.deriv);
                seen = true;
            }
    return seen ? m : 0;
}

GradedPoly substitute(const GradedPoly& p, const std::function<std::optional<GradedPoly>(const Symbol&)>& sub) {
    GradedPoly r;
    for (const auto& [f, c] : p.terms()) {
        GradedPoly acc(c);
        for (const auto& s : f) {
            auto img = sub(s);
            acc = acc * (img ? *img : GradedPoly::of(s));
        }
        r += acc;
    }
    return r;
}

} // namespace

// ---------------------------------------------------------------------------
// rules

GradedPoly apply_rule(const VariationRule& r, const GradedPoly& p) {
    GradedPoly out;
    for (const auto& [f, c] : p.terms()) {
        for (size_t k = 0; k < f.size(); ++k) {
            if (!f[k].is_field())
                continue;
            auto it = r.images.find(f[k].base());
            if (it == r.images.end())
                throw Error("rule " + r.label + " has no image for " + f[k].base().to_string());
            if (it->second.is_zero())
                continue;
            GradedPoly img = time_derivative(it->second, f[k].deriv);
            int sign = swap_sign(r.degree, degree_of(f, k));
            Factors pre(f.begin(), f.begin() + static_cast<std::ptrdiff_t>(k));
            Factors post(f.begin() + static_cast<std::ptrdiff_t>(k) + 1, f.end());
            GradedPoly term = GradedPoly::monomial(sign > 0 ? c : -c, pre) * img * GradedPoly::monomial(1, post);
            out += term;
        }
    }
    return out;
}

std::string_view name_of(Delta d) {
    switch (d) {
    case Delta::d10:
        return "delta10";
    case Delta::d01:
        return "delta01";
    case Delta::d11:
        return "delta11";
    }
    return "?";
}

namespace {

Symbol fs(FieldName f, bool bar = false, unsigned d = 0) { return Symbol::field(f, bar, d); }

std::vector<Symbol> complex_fields(std::initializer_list<FieldName> names) {
    std::vector<Symbol> out;
    for (FieldName f : names) {
        out.push_back(fs(f));
        if (!is_real_field(f))
            out.push_back(fs(f, true));
    }
    std::sort(out.begin(), out.end());
    return out;
}

VariationRule rule_from_text(std::string label, const std::vector<std::pair<Symbol, const char*>>& images) {
    VariationRule r{std::move(label), Degree{0, 0}, {}};
    for (const auto& [s, text] : images)
        r.images[s] = parse_graded_poly(text);
    return r;
}

VariableSystem make_base() {
    using FN = FieldName;
    VariableSystem s;
    s.name = "x,z";
    s.fields = complex_fields({FN::x, FN::z, FN::psi, FN::xi});
    const Symbol x = fs(FN::x), z = fs(FN::z), psi = fs(FN::psi), xi = fs(FN::xi);
    const Symbol xb = fs(FN::x, true), zb = fs(FN::z, true), psib = fs(FN::psi, true), xib = fs(FN::xi, true);
    s.deltas[Delta::d10] = rule_from_text("delta10", {{x, "epsBar10*psi"},
                                                      {z, "epsBar10*xi"},
                                                      {psi, "i*eps10*dx"},
                                                      {xi, "i*eps10*dz"},
                                                      {xb, "-eps10*psibar"},
                                                      {zb, "eps10*xibar"},
                                                      {psib, "-i*epsBar10*dxbar"},
                                                      {xib, "i*epsBar10*dzbar"}});
    s.deltas[Delta::d01] = rule_from_text("delta01", {{x, "-i*epsBar01*xi"},
                                                      {z, "-i*epsBar01*psi"},
                                                      {psi, "-eps01*dz"},
                                                      {xi, "-eps01*dx"},
                                                      {xb, "-i*eps01*xibar"},
                                                      {zb, "i*eps01*psibar"},
                                                      {psib, "epsBar01*dzbar"},
                                                      {xib, "-epsBar01*dxbar"}});
    s.deltas[Delta::d11] = rule_from_text("delta11", {{x, "-eps11*dz"},
                                                      {z, "-eps11*dx"},
                                                      {psi, "eps11*dxi"},
                                                      {xi, "eps11*dpsi"},
                                                      {xb, "-eps11*dzbar"},
                                                      {zb, "-eps11*dxbar"},
                                                      {psib, "-eps11*dxibar"},
                                                      {xib, "-eps11*dpsibar"}});
    s.rewrite = [](const GradedPoly& p) { return p; };
    return s;
}

// Rewrites in terms of the new variables; order-0 occurrences of replaced
// variables cannot be expressed and are rejected.
std::optional<GradedPoly> replace_z_by_F(const Symbol& s) {
    if (!s.is_field() || s.field_name() != FieldName::z)
        return std::nullopt;
    if (s.deriv == 0)
        throw Error("z itself cannot be written in terms of F");
    return GradedPoly::of(fs(FieldName::F, s.barred, s.deriv - 1u));
}

std::optional<GradedPoly> replace_x_by_yA(const Symbol& s) {
    if (!s.is_field() || s.field_name() != FieldName::x)
        return std::nullopt;
    if (s.deriv == 0)
        throw Error("x itself cannot be written in terms of y and A");
    // dx = dy - i*A, dxbar = dy + i*A
    GradedPoly a = GradedPoly::of(fs(FieldName::A, false, s.deriv - 1u)).scaled(GaussianRational::i());
    GradedPoly y = GradedPoly::of(fs(FieldName::y, false, s.deriv));
    return s.barred ? y + a : y - a;
}

std::optional<GradedPoly> replace_x_by_a(const Symbol& s) {
    if (!s.is_field() || s.field_name() != FieldName::x)
        return std::nullopt;
    if (s.deriv == 0)
        throw Error("x itself cannot be written in terms of a");
    return GradedPoly::of(fs(FieldName::a, s.barred, s.deriv - 1u));
}

VariableSystem derive_system(std::string name, std::vector<Symbol> fields,
                             std::function<std::optional<GradedPoly>(const Symbol&)> sub,
                             std::vector<std::pair<Symbol, GradedPoly>> defs) {
    const VariableSystem& base = base_system();
    VariableSystem s;
    s.name = std::move(name);
    s.fields = std::move(fields);
    s.definitions = std::move(defs);
    s.rewrite = [sub](const GradedPoly& p) { return substitute(p, sub); };
    for (const auto& [d, rule] : base.deltas) {
        VariationRule r{rule.label, rule.degree, {}};
        for (const Symbol& f : s.fields) {
            auto def = std::find_if(s.definitions.begin(), s.definitions.end(),
                                    [&](const auto& e) { return e.first == f; });
            GradedPoly original = def == s.definitions.end() ? GradedPoly::of(f) : def->second;
            r.images[f] = s.rewrite(apply_rule(rule, original));
        }
        s.deltas[d] = std::move(r);
    }
    return s;
}

} // namespace

const VariableSystem& base_system() {
    static const VariableSystem s = make_base();
    return s;
}

const VariableSystem& variable_system(const std::string& name) {
    using FN = FieldName;
    static const std::map<std::string, VariableSystem> systems = [] {
        std::map<std::string, VariableSystem> m;
        auto p = [](const char* t) { return parse_graded_poly(t); };
        const std::pair<Symbol, GradedPoly> defF{fs(FN::F), p("dz")}, defFb{fs(FN::F, true), p("dzbar")};
        const std::pair<Symbol, GradedPoly> defy{fs(FN::y), p("1/2*x + 1/2*xbar")},
            defA{fs(FN::A), p("i/2*dx - i/2*dxbar")};
        const std::pair<Symbol, GradedPoly> defa{fs(FN::a), p("dx")}, defab{fs(FN::a, true), p("dxbar")};

        m.emplace("x,F", derive_system("x,F", complex_fields({FN::x, FN::F, FN::psi, FN::xi}), replace_z_by_F,
                                       {defF, defFb}));
        m.emplace("y,A,F",
                  derive_system(
                      "y,A,F", complex_fields({FN::y, FN::A, FN::F, FN::psi, FN::xi}),
                      [](const Symbol& s) {
                          auto r = replace_x_by_yA(s);
                          return r ? r : replace_z_by_F(s);
                      },
                      {defF, defFb, defy, defA}));
        m.emplace("y,A,z", derive_system("y,A,z", complex_fields({FN::y, FN::A, FN::z, FN::psi, FN::xi}),
                                         replace_x_by_yA, {defy, defA}));
        m.emplace("a,z", derive_system("a,z", complex_fields({FN::a, FN::z, FN::psi, FN::xi}), replace_x_by_a,
                                       {defa, defab}));
        return m;
    }();
    if (name == "x,z")
        return base_system();
    auto it = systems.find(name);
    if (it == systems.end())
        throw Error("unknown variable system " + name);
    return it->second;
}

GradedPoly apply_delta(Delta d, const GradedPoly& p, const VariableSystem& sys) {
    return apply_rule(sys.deltas.at(d), p);
}

VariationRule generator_rule(Generator g, const VariableSystem& sys) {
    VariationRule r;
    r.label = std::string(name_of(g));
    r.degree = degree_of(g);
    for (const Symbol& f : sys.fields) {
        GradedPoly img;
        switch (g) {
        case Generator::H:
            img = time_derivative(GradedPoly::of(f)).scaled(GaussianRational::i());
            break;
        case Generator::Q10:
            img = -strip_constant(apply_delta(Delta::d10, GradedPoly::of(f), sys), ConstName::eps10);
            break;
        case Generator::Q10d:
            img = -strip_constant(apply_delta(Delta::d10, GradedPoly::of(f), sys), ConstName::epsBar10);
            break;
        case Generator::Q01:
            img = -strip_constant(apply_delta(Delta::d01, GradedPoly::of(f), sys), ConstName::eps01);
            break;
        case Generator::Q01d:
            img = -strip_constant(apply_delta(Delta::d01, GradedPoly::of(f), sys), ConstName::epsBar01);
            break;
        case Generator::Z:
            img = strip_constant(apply_delta(Delta::d11, GradedPoly::of(f), sys), ConstName::eps11)
                      .scaled(-GaussianRational::i());
            break;
        }
        r.images[f] = std::move(img);
    }
    return r;
}

GradedPoly apply_generator(Generator g, const GradedPoly& p, const VariableSystem& sys) {
    return apply_rule(generator_rule(g, sys), p);
}

VariationRule generator_rule_from_tables(Generator g) {
    using FN = FieldName;
    VariationRule r;
    r.label = std::string(name_of(g)) + " (tables)";
    r.degree = degree_of(g);
    const std::array<FN, 4> order{FN::x, FN::z, FN::psi, FN::xi};
    for (const auto& irrep : catalog_irrep4()) {
        const bool bar = irrep.name == "Phi2";
        if (g == Generator::H) {
            for (FN f : order)
                r.images[fs(f, bar)] = time_derivative(GradedPoly::of(fs(f, bar))).scaled(GaussianRational::i());
            continue;
        }
        RepMatrix m = irrep.rescaled_table.matrix(g);
        for (size_t col = 0; col < 4; ++col) {
            GradedPoly img;
            for (size_t row = 0; row < 4; ++row) {
                const RationalFunction& e = m(row, col);
                if (e.is_zero())
                    continue;
                if (!e.is_polynomial() || e.num().degree_lambda() != 0)
                    throw Error("table entry is not a polynomial in E");
                const GaussianRational den = e.den().constant_term();
                for (const auto& [ex, c] : e.num().terms()) {
                    // E^k -> (i d/dt)^k
                    GaussianRational ik(1);
                    for (unsigned k = 0; k < ex.e; ++k)
                        ik *= GaussianRational::i();
                    img += GradedPoly::of(fs(order[row], bar, ex.e)).scaled(c * ik / den);
                }
            }
            r.images[fs(order[col], bar)] = std::move(img);
        }
    }
    return r;
}

// ---------------------------------------------------------------------------
// mechanics

GradedPoly build_action1(const GradedPoly& g) {
    if (g.is_zero())
        return g;
    auto d = g.degree();
    if (!d || !(*d == Degree{1, 1}))
        throw Error("action1 needs g of degree (1,1)");
    for (const auto& [f, c] : g.terms())
        for (const auto& s : f)
            if (!s.is_field() && s.const_name() != ConstName::mu)
                throw Error("action1 input must not contain variation parameters");
    GradedPoly r = g;
    for (Generator gen : {Generator::Q01, Generator::Q01d, Generator::Q10, Generator::Q10d, Generator::Z})
        r = apply_generator(gen, r);
    return r;
}

GradedPoly euler_lagrange(const GradedPoly& L, const Symbol& q) {
    const Symbol b = q.base();
    const unsigned m = max_order(L, b);
    GradedPoly out;
    for (unsigned k = 0; k <= m; ++k) {
        GradedPoly pk = left_derivative(L, b.derived(k));
        if (pk.is_zero())
            continue;
        GradedPoly t = time_derivative(pk, k);
        out += (k % 2) ? -t : t;
    }
    return out;
}

namespace {

// sum_{i>=1} sum_{j<i} (-1)^j D^{i-1-j}(v) * D^j(dL/dq^(i))
GradedPoly boundary_pairing(const GradedPoly& L, const Symbol& q, const GradedPoly& v) {
    GradedPoly out;
    const unsigned m = max_order(L, q);
    for (unsigned i = 1; i <= m; ++i) {
        GradedPoly pi = left_derivative(L, q.derived(i));
        if (pi.is_zero())
            continue;
        for (unsigned j = 0; j < i; ++j) {
            GradedPoly t = time_derivative(v, i - 1 - j) * time_derivative(pi, j);
            out += (j % 2) ? -t : t;
        }
    }
    return out;
}

size_t field_count(const Factors& f) {
    return static_cast<size_t>(std::count_if(f.begin(), f.end(), [](const Symbol& s) { return s.is_field(); }));
}

} // namespace

TotalDerivative is_total_derivative(const GradedPoly& p) {
    TotalDerivative r;
    std::map<size_t, GradedPoly> parts;
    for (const auto& [f, c] : p.terms())
        parts[field_count(f)].add_canonical(f, c);
    if (parts.count(0))
        return r;
    const auto fields = field_bases(p);
    for (const Symbol& q : fields)
        if (!euler_lagrange(p, q).is_zero())
            return r;
    GradedPoly k;
    for (const auto& [d, pd] : parts) {
        GradedPoly kd;
        for (const Symbol& q : fields)
            kd += boundary_pairing(pd, q, GradedPoly::of(q));
        k += kd.scaled(GaussianRational(mpq_class(1, static_cast<unsigned long>(d))));
    }
    if (time_derivative(k) != p)
        throw Error("internal: homotopy witness failed to reproduce " + p.to_string());
    r.is_total = true;
    r.witness = std::move(k);
    return r;
}

GradedPoly substitute_eom(const GradedPoly& p, const Lagrangian& L, const std::vector<Symbol>& vars) {
    GradedPoly cur = p;
    for (const Symbol& w0 : vars) {
        const Symbol w = w0.base();
        std::optional<GradedPoly> solution;
        for (const Symbol& q : L.system->fields) {
            GradedPoly el = euler_lagrange(L.expr, q);
            GaussianRational alpha;
            GradedPoly rest;
            bool usable = true;
            for (const auto& [f, c] : el.terms()) {
                bool has_w = std::any_of(f.begin(), f.end(), [&](const Symbol& s) { return s.is_field() && s.base() == w; });
                if (f == Factors{w})
                    alpha = c;
                else if (has_w)
                    usable = false;
                else
                    rest.add_canonical(f, c);
            }
            if (usable && !alpha.is_zero()) {
                solution = rest.scaled(-alpha.inverse());
                break;
            }
        }
        if (!solution)
            throw Error("no algebraic equation of motion for " + w.to_string() + " in " + L.name);
        const unsigned cap = derivative_cap();
        cur = substitute(cur, [&](const Symbol& s) -> std::optional<GradedPoly> {
            if (!s.is_field() || s.base() != w)
                return std::nullopt;
            if (s.deriv > cap)
                throw DerivativeCapError("derivative cap exceeded while substituting " + w.to_string());
            return time_derivative(*solution, s.deriv);
        });
    }
    return cur;
}

bool NoetherSet::invariant() const {
    return std::all_of(variations.begin(), variations.end(),
                       [](const VariationCheck& v) { return v.invariance.is_total; });
}

const NoetherCharge& NoetherSet::charge(Generator g) const {
    for (const auto& c : charges)
        if (c.gen == g)
            return c;
    throw Error("no Noether charge for " + std::string(name_of(g)));
}

NoetherSet noether_charges(const Lagrangian& L) {
    const VariableSystem& sys = *L.system;
    NoetherSet out;
    std::map<Symbol, GradedPoly> el;
    for (const Symbol& q : sys.fields)
        el[q] = euler_lagrange(L.expr, q);

    struct Strip {
        Delta delta;
        ConstName eps;
        Generator gen;
    };
    const Strip strips[] = {{Delta::d10, ConstName::eps10, Generator::Q10},
                            {Delta::d10, ConstName::epsBar10, Generator::Q10d},
                            {Delta::d01, ConstName::eps01, Generator::Q01},
                            {Delta::d01, ConstName::epsBar01, Generator::Q01d},
                            {Delta::d11, ConstName::eps11, Generator::Z}};

    std::map<Delta, GradedPoly> currents;
    std::map<Delta, GradedPoly> on_shell; // sum_q delta q * EL_q
    for (Delta d : kAllDeltas) {
        VariationCheck vc{d, apply_delta(d, L.expr, sys), {}};
        vc.invariance = is_total_derivative(vc.variation);
        if (vc.invariance.is_total) {
            GradedPoly b, eom;
            for (const Symbol& q : sys.fields) {
                GradedPoly dq = apply_delta(d, GradedPoly::of(q), sys);
                b += boundary_pairing(L.expr, q, dq);
                eom += dq * el[q];
            }
            currents[d] = b - *vc.invariance.witness;
            on_shell[d] = eom;
        }
        out.variations.push_back(std::move(vc));
    }
    if (!out.invariant())
        throw Error(L.name + " is not invariant under every variation");
    for (const Strip& s : strips) {
        NoetherCharge c{s.gen, strip_constant(currents[s.delta], s.eps), false};
        GradedPoly lhs = time_derivative(c.charge) + strip_constant(on_shell[s.delta], s.eps);
        c.conserved = lhs.is_zero();
        out.charges.push_back(std::move(c));
    }
    return out;
}

std::optional<GaussianRational> proportionality(const GradedPoly& a, const GradedPoly& b) {
    if (a.is_zero() && b.is_zero())
        return GaussianRational(1);
    if (a.is_zero() || b.is_zero())
        return std::nullopt;
    const auto& [f, cb] = *b.terms().begin();
    auto it = a.terms().find(f);
    if (it == a.terms().end())
        return std::nullopt;
    GaussianRational c = it->second / cb;
    if (b.scaled(c) != a)
        return std::nullopt;
    return c;
}

// ---------------------------------------------------------------------------
// text and JSON

namespace {

class PolyParser {
  public:
    explicit PolyParser(std::string_view t) : text_(t) {}

    GradedPoly parse() {
        GradedPoly r = expression();
        skip();
        if (pos_ != text_.size())
            fail("unexpected character");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }
    void skip() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }
    bool accept(char c) {
        skip();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    GradedPoly expression() {
        GradedPoly acc;
        bool neg = accept('-');
        if (!neg)
            accept('+');
        GradedPoly t = term();
        acc += neg ? -t : t;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    GradedPoly term() {
        GradedPoly acc = power();
        for (;;) {
            if (accept('*')) {
                acc = acc * power();
            } else if (accept('/')) {
                GradedPoly d = power();
                if (d.size() != 1 || !d.terms().begin()->first.empty())
                    fail("division by a non-constant");
                acc = acc.scaled(d.terms().begin()->second.inverse());
            } else {
                return acc;
            }
        }
    }

    GradedPoly power() {
        GradedPoly base = factor();
        if (accept('^')) {
            skip();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            unsigned n = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            GradedPoly r(1);
            for (unsigned k = 0; k < n; ++k)
                r = r * base;
            return r;
        }
        return base;
    }

    GradedPoly factor() {
        skip();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            GradedPoly r = expression();
            if (!accept(')'))
                fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++pos_;
            return -factor();
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (pos_ < text_.size() && text_[pos_] == '.')
                fail("floating-point literals are not accepted");
            return GradedPoly(GaussianRational(mpq_class(mpz_class(std::string(text_.substr(start, pos_ - start))))));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            return identifier(std::string(text_.substr(start, pos_ - start)));
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    GradedPoly identifier(const std::string& id) {
        if (id == "i")
            return GradedPoly(GaussianRational::i());
        for (size_t k = 0; k < std::size(kConstNames); ++k)
            if (id == kConstNames[k])
                return GradedPoly::of(Symbol::constant(static_cast<ConstName>(k)));
        size_t d = 0;
        while (d < id.size() && id[d] == 'd')
            ++d;
        std::string rest = id.substr(d);
        bool bar = false;
        if (rest.size() > 3 && rest.compare(rest.size() - 3, 3, "bar") == 0) {
            bar = true;
            rest.resize(rest.size() - 3);
        }
        for (size_t k = 0; k < std::size(kFieldNames); ++k)
            if (rest == kFieldNames[k])
                return GradedPoly::of(Symbol::field(static_cast<FieldName>(k), bar, static_cast<unsigned>(d)));
        fail("unknown symbol '" + id + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
};

} // namespace

GradedPoly parse_graded_poly(std::string_view text) { return PolyParser(text).parse(); }

nlohmann::json to_json(const GradedPoly& p) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& [f, c] : p.terms()) {
        nlohmann::json factors = nlohmann::json::array();
        for (const auto& s : f) {
            if (s.is_field())
                factors.push_back(
                    {{"kind", "field"}, {"name", kFieldNames[s.name]}, {"barred", s.barred}, {"deriv", s.deriv}});
            else
                factors.push_back({{"kind", "constant"}, {"name", kConstNames[s.name]}});
        }
        terms.push_back({{"coeff", to_json(c)}, {"factors", std::move(factors)}});
    }
    return {{"text", p.to_string()}, {"terms", std::move(terms)}};
}

} // namespace z2tk
