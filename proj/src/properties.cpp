#include "z2tk/properties.hpp"

#include "z2tk/induced_rep.hpp"
#include "z2tk/supermech.hpp"

#include <random>

namespace z2tk {

namespace {

using Rng = std::mt19937;

size_t pick(Rng& rng, size_t n) { return std::uniform_int_distribution<size_t>(0, n - 1)(rng); }

Symbol random_symbol(Rng& rng) {
    if (pick(rng, 5) == 0)
        return Symbol::constant(static_cast<ConstName>(pick(rng, 6)));
    auto f = static_cast<FieldName>(pick(rng, 8));
    bool bar = !is_real_field(f) && pick(rng, 2) == 1;
    return Symbol::field(f, bar, static_cast<unsigned>(pick(rng, 3)));
}

// only the four original fields and their bars, which the base rules cover
Symbol random_base_symbol(Rng& rng) {
    if (pick(rng, 6) == 0)
        return Symbol::constant(ConstName::mu);
    return Symbol::field(static_cast<FieldName>(pick(rng, 4)), pick(rng, 2) == 1, static_cast<unsigned>(pick(rng, 3)));
}

GaussianRational random_coeff(Rng& rng) {
    long re = static_cast<long>(pick(rng, 7)) - 3;
    long im = static_cast<long>(pick(rng, 5)) - 2;
    long den = static_cast<long>(pick(rng, 3)) + 1;
    GaussianRational c(mpq_class(re, den), mpq_class(im, den));
    return c.is_zero() ? GaussianRational(1) : c;
}

Factors random_factors(Rng& rng, size_t max_len, bool base_only) {
    Factors f;
    size_t n = 1 + pick(rng, max_len);
    for (size_t k = 0; k < n; ++k)
        f.push_back(base_only ? random_base_symbol(rng) : random_symbol(rng));
    return f;
}

GradedPoly random_poly(Rng& rng, bool base_only) {
    GradedPoly p;
    size_t n = 1 + pick(rng, 3);
    for (size_t k = 0; k < n; ++k)
        p += GradedPoly::monomial(random_coeff(rng), random_factors(rng, 3, base_only));
    return p;
}

std::string factors_text(const Factors& f) {
    std::string s;
    for (const auto& x : f)
        s += (s.empty() ? "" : "*") + x.to_string();
    return s;
}

RationalFunction random_rf(Rng& rng, bool nonzero) {
    auto poly = [&] {
        BiPoly p;
        size_t n = 1 + pick(rng, 3);
        for (size_t k = 0; k < n; ++k)
            p += BiPoly::monomial(random_coeff(rng), static_cast<unsigned>(pick(rng, 3)),
                                  static_cast<unsigned>(pick(rng, 2)));
        return p;
    };
    BiPoly num = poly();
    while (nonzero && num.is_zero())
        num = poly();
    BiPoly den = poly();
    while (den.is_zero())
        den = poly();
    return RationalFunction(num, den);
}

void record(PropertyResult& r, bool ok, const std::string& what) {
    ++r.cases;
    if (!ok && r.failures++ == 0)
        r.first_failure = what;
}

} // namespace

PropertyResult check_confluence(size_t cases, std::uint32_t seed) {
    PropertyResult r{"normalization confluence", 0, 0, {}};
    Rng rng(seed);
    for (size_t k = 0; k < cases; ++k) {
        Factors f = random_factors(rng, 7, false);
        GaussianRational c = random_coeff(rng);
        NormalizedMonomial ref = normalize(c, f);
        bool ok = true;
        for (int rep = 0; rep < 4 && ok; ++rep) {
            NormalizedMonomial alt = normalize(c, f, &rng);
            ok = alt.coeff == ref.coeff && (ref.coeff.is_zero() || alt.factors == ref.factors);
        }
        record(r, ok, factors_text(f));
    }
    return r;
}

PropertyResult check_sign_table() {
    PropertyResult r{"sign-rule table", 0, 0, {}};
    const std::pair<Degree, FieldName> reps[] = {{Degree{0, 0}, FieldName::x},
                                                 {Degree{1, 1}, FieldName::z},
                                                 {Degree{1, 0}, FieldName::psi},
                                                 {Degree{0, 1}, FieldName::xi}};
    for (const auto& [d1, f1] : reps)
        for (const auto& [d2, f2] : reps) {
            // same field: use the first derivative as the second symbol
            Symbol a = Symbol::field(f1), b = Symbol::field(f2, false, 1);
            Symbol lo = std::min(a, b), hi = std::max(a, b);
            GradedPoly got = canonical_product(GradedPoly::of(hi), GradedPoly::of(lo));
            GradedPoly want = GradedPoly::monomial(swap_sign(d1, d2), {lo, hi});
            record(r, got == want, d1.to_string() + " x " + d2.to_string());
        }
    return r;
}

PropertyResult check_leibniz(size_t cases, std::uint32_t seed) {
    PropertyResult r{"derivation Leibniz rule", 0, 0, {}};
    Rng rng(seed);
    const VariableSystem& sys = base_system();
    for (size_t k = 0; k < cases; ++k) {
        GradedPoly f = GradedPoly::monomial(random_coeff(rng), random_factors(rng, 3, true));
        if (f.is_zero()) {
            --k;
            continue;
        }
        GradedPoly h = random_poly(rng, true);
        const Degree df = *f.degree();
        size_t which = pick(rng, 8);
        GradedPoly lhs, rhs;
        if (which < 5) {
            Generator g = std::array{Generator::Q10, Generator::Q10d, Generator::Q01, Generator::Q01d,
                                     Generator::Z}[which];
            lhs = apply_generator(g, f * h, sys);
            GradedPoly second = f * apply_generator(g, h, sys);
            rhs = apply_generator(g, f, sys) * h + (swap_sign(degree_of(g), df) > 0 ? second : -second);
        } else {
            Delta d = kAllDeltas[which - 5];
            lhs = apply_delta(d, f * h, sys);
            rhs = apply_delta(d, f, sys) * h + f * apply_delta(d, h, sys);
        }
        record(r, lhs == rhs, f.to_string() + " | " + h.to_string());
    }
    return r;
}

PropertyResult check_conjugation_involution(size_t cases, std::uint32_t seed) {
    PropertyResult r{"conjugation involution", 0, 0, {}};
    Rng rng(seed);
    for (size_t k = 0; k < cases; ++k) {
        GradedPoly p = random_poly(rng, false);
        record(r, conjugate(conjugate(p)) == p, p.to_string());
    }
    return r;
}

PropertyResult check_field_axioms(size_t cases, std::uint32_t seed) {
    PropertyResult r{"rational-function field axioms", 0, 0, {}};
    Rng rng(seed);
    const RationalFunction one(1), zero(0);
    for (size_t k = 0; k < cases; ++k) {
        RationalFunction a = random_rf(rng, true), b = random_rf(rng, false), c = random_rf(rng, false);
        bool ok = (a + b) == (b + a) && (a * b) == (b * a) && ((a + b) + c) == (a + (b + c)) &&
                  ((a * b) * c) == (a * (b * c)) && (a * (b + c)) == (a * b + a * c) && (a + zero) == a &&
                  (a * one) == a && (a - a).is_zero() && (a * a.inverse()) == one && ((a + b) - b) == a &&
                  ((b / a) * a) == b;
        record(r, ok, a.to_string() + " ; " + b.to_string() + " ; " + c.to_string());
    }
    return r;
}

PropertyResult check_specialize_homomorphism(size_t cases, std::uint32_t seed) {
    PropertyResult r{"specialization is a ring homomorphism", 0, 0, {}};
    Rng rng(seed);
    for (size_t k = 0; k < cases; ++k) {
        RationalFunction a = random_rf(rng, false), b = random_rf(rng, false);
        GaussianRational e0 = random_coeff(rng), l0 = random_coeff(rng);
        try {
            GaussianRational sa = rf_specialize(a, e0, l0), sb = rf_specialize(b, e0, l0);
            bool ok = rf_specialize(a * b, e0, l0) == sa * sb && rf_specialize(a + b, e0, l0) == sa + sb;
            record(r, ok, a.to_string() + " ; " + b.to_string() + " at " + e0.to_string() + ", " + l0.to_string());
        } catch (const PoleError&) {
            // undefined there; draw again
        }
    }
    return r;
}

PropertyResult check_jacobi(const MatrixRep& rep, const std::string& label) {
    PropertyResult r{"graded Jacobi identity on " + label, 0, 0, {}};
    for (Generator a : kAllGenerators)
        for (Generator b : kAllGenerators)
            for (Generator c : kAllGenerators)
                if (a <= b && b <= c)
                    record(r, jacobi_residual(rep, a, b, c).is_zero(),
                           std::string(name_of(a)) + "," + std::string(name_of(b)) + "," + std::string(name_of(c)));
    return r;
}

PropertyResult check_time_derivative_commutes() {
    PropertyResult r{"d/dt commutes with the derivations", 0, 0, {}};
    const VariableSystem& sys = base_system();
    for (const Symbol& f : sys.fields) {
        GradedPoly p = GradedPoly::of(f);
        for (Generator g : kAllGenerators)
            record(r, time_derivative(apply_generator(g, p, sys)) == apply_generator(g, time_derivative(p), sys),
                   std::string(name_of(g)) + " on " + f.to_string());
        for (Delta d : kAllDeltas)
            record(r, time_derivative(apply_delta(d, p, sys)) == apply_delta(d, time_derivative(p), sys),
                   std::string(name_of(d)) + " on " + f.to_string());
    }
    return r;
}

std::vector<PropertyResult> property_suite() {
    return {check_confluence(1000),
            check_sign_table(),
            check_leibniz(500),
            check_conjugation_involution(300),
            check_field_axioms(1000),
            check_specialize_homomorphism(300),
            check_time_derivative_commutes(),
            check_jacobi(build_DE().rep, "D(E)"),
            check_jacobi(build_DEl().rep, "D(E,lambda)")};
}

} // namespace z2tk
