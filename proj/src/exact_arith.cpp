#include "z2tk/exact_arith.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

namespace z2tk {

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(mpq_class re, mpq_class im) : re_(std::move(re)), im_(std::move(im)) {
    re_.canonicalize();
    im_.canonicalize();
}

GaussianRational GaussianRational::rational(long num, long den) {
    if (den == 0)
        throw DivisionByZero("zero denominator in rational literal");
    mpq_class q(num, den);
    q.canonicalize();
    return GaussianRational(q);
}

GaussianRational GaussianRational::inverse() const {
    if (is_zero())
        throw DivisionByZero("inverse of zero");
    mpq_class n = re_ * re_ + im_ * im_;
    return {re_ / n, -im_ / n};
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
    if (sgn(im_) == 0 && sgn(o.im_) == 0) {
        re_ *= o.re_;
        return *this;
    }
    mpq_class r = re_ * o.re_ - im_ * o.im_;
    mpq_class i = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(r);
    im_ = std::move(i);
    return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
    if (o.is_zero())
        throw DivisionByZero("division by zero");
    if (sgn(o.im_) == 0) {
        re_ /= o.re_;
        im_ /= o.re_;
        return *this;
    }
    return *this *= o.inverse();
}

std::string GaussianRational::to_string() const {
    if (is_zero())
        return "0";
    std::string out;
    if (sgn(re_) != 0)
        out = re_.get_str();
    if (sgn(im_) != 0) {
        mpq_class a = abs(im_);
        if (sgn(im_) < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (a != 1)
            out += a.get_str() + "*";
        out += "i";
    }
    return out;
}

bool is_zero(const GaussianRational& x) { return x.is_zero(); }

// ---------------------------------------------------------------------------
// BiPoly

BiPoly::BiPoly(const GaussianRational& c) {
    if (!c.is_zero())
        terms_.emplace(Exponent{0, 0}, c);
}

BiPoly BiPoly::monomial(const GaussianRational& c, unsigned e, unsigned l) {
    BiPoly p;
    p.add_term({e, l}, c);
    return p;
}

bool BiPoly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponent{0, 0});
}

GaussianRational BiPoly::constant_term() const {
    auto it = terms_.find({0, 0});
    return it == terms_.end() ? GaussianRational() : it->second;
}

unsigned BiPoly::degree_E() const noexcept {
    unsigned d = 0;
    for (const auto& [ex, c] : terms_)
        d = std::max(d, ex.e);
    return d;
}

unsigned BiPoly::degree_lambda() const noexcept {
    unsigned d = 0;
    for (const auto& [ex, c] : terms_)
        d = std::max(d, ex.l);
    return d;
}

void BiPoly::add_term(const Exponent& ex, const GaussianRational& c) {
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.emplace(ex, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [ex, c] : o.terms_)
        add_term(ex, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [ex, c] : o.terms_)
        add_term(ex, -c);
    return *this;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) {
    BiPoly r;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            r.add_term({ea.e + eb.e, ea.l + eb.l}, ca * cb);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [ex, c] : r.terms_)
        c = -c;
    return r;
}

BiPoly BiPoly::scaled(const GaussianRational& c) const {
    if (c.is_zero())
        return {};
    BiPoly r = *this;
    for (auto& [ex, v] : r.terms_)
        v *= c;
    return r;
}

namespace {

GaussianRational power(const GaussianRational& x, unsigned n) {
    GaussianRational r(1);
    GaussianRational b = x;
    while (n) {
        if (n & 1u)
            r *= b;
        n >>= 1u;
        if (n)
            b *= b;
    }
    return r;
}

} // namespace

GaussianRational BiPoly::evaluate(const GaussianRational& E0, const GaussianRational& L0) const {
    GaussianRational acc;
    for (const auto& [ex, c] : terms_)
        acc += c * power(E0, ex.e) * power(L0, ex.l);
    return acc;
}

std::string BiPoly::to_string() const {
    if (terms_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    // Highest term first.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [ex, c] = *it;
        std::string factors;
        if (ex.e == 1)
            factors += "*E";
        else if (ex.e > 1)
            factors += "*E^" + std::to_string(ex.e);
        if (ex.l == 1)
            factors += "*lambda";
        else if (ex.l > 1)
            factors += "*lambda^" + std::to_string(ex.l);

        std::string coeff = c.to_string();
        bool compound = !c.is_real() && sgn(c.re()) != 0;
        bool negative = !compound && coeff.front() == '-';
        if (negative)
            coeff.erase(0, 1);
        if (compound)
            coeff = "(" + coeff + ")";

        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        if (factors.empty())
            os << coeff;
        else if (coeff == "1")
            os << factors.substr(1);
        else
            os << coeff << factors;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Bivariate gcd via recursive representation Q(i)[E][lambda] and primitive PRS.

namespace {

using UPoly = std::vector<GaussianRational>; // coefficients in E, ascending
using RPoly = std::vector<UPoly>;            // coefficients in lambda, ascending

void trim(UPoly& p) {
    while (!p.empty() && p.back().is_zero())
        p.pop_back();
}

void trim(RPoly& p) {
    while (!p.empty() && p.back().empty())
        p.pop_back();
}

int degree(const RPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly sub(const UPoly& a, const UPoly& b) {
    UPoly r(std::max(a.size(), b.size()));
    for (size_t k = 0; k < a.size(); ++k)
        r[k] += a[k];
    for (size_t k = 0; k < b.size(); ++k)
        r[k] -= b[k];
    trim(r);
    return r;
}

UPoly mul(const UPoly& a, const UPoly& b) {
    if (a.empty() || b.empty())
        return {};
    UPoly r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero())
            continue;
        for (size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

// Division with remainder over the field Q(i).
std::pair<UPoly, UPoly> divmod(UPoly a, const UPoly& b) {
    if (b.empty())
        throw DivisionByZero("polynomial division by zero");
    UPoly q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0);
    GaussianRational lcinv = b.back().inverse();
    while (!a.empty() && a.size() >= b.size()) {
        size_t shift = a.size() - b.size();
        GaussianRational f = a.back() * lcinv;
        q[shift] = f;
        for (size_t k = 0; k < b.size(); ++k)
            a[k + shift] -= f * b[k];
        a.pop_back();
        trim(a);
    }
    trim(q);
    return {q, a};
}

UPoly make_monic(UPoly p) {
    if (p.empty())
        return p;
    GaussianRational inv = p.back().inverse();
    for (auto& c : p)
        c *= inv;
    return p;
}

UPoly gcd(UPoly a, UPoly b) {
    while (!b.empty()) {
        UPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(std::move(a));
}

RPoly to_recursive(const BiPoly& p) {
    RPoly r(p.is_zero() ? 0 : p.degree_lambda() + 1);
    for (const auto& [ex, c] : p.terms()) {
        UPoly& u = r[ex.l];
        if (u.size() <= ex.e)
            u.resize(ex.e + 1);
        u[ex.e] = c;
    }
    return r;
}

BiPoly from_recursive(const RPoly& r) {
    BiPoly p;
    for (size_t l = 0; l < r.size(); ++l)
        for (size_t e = 0; e < r[l].size(); ++e)
            p.add_term({static_cast<unsigned>(e), static_cast<unsigned>(l)}, r[l][e]);
    return p;
}

UPoly content(const RPoly& p) {
    UPoly g;
    for (const auto& c : p) {
        if (c.empty())
            continue;
        g = g.empty() ? make_monic(c) : gcd(g, c);
        if (g.size() == 1)
            break;
    }
    return g;
}

RPoly divide_coefficients(const RPoly& p, const UPoly& d) {
    RPoly r(p.size());
    for (size_t k = 0; k < p.size(); ++k) {
        if (p[k].empty())
            continue;
        auto [q, rem] = divmod(p[k], d);
        if (!rem.empty())
            throw Error("inexact coefficient division");
        r[k] = std::move(q);
    }
    trim(r);
    return r;
}

RPoly primitive_part(const RPoly& p) {
    if (p.empty())
        return p;
    return divide_coefficients(p, content(p));
}

// Pseudo-remainder of a by b in lambda.
RPoly pseudo_remainder(RPoly a, const RPoly& b) {
    const UPoly& lc = b.back();
    while (!a.empty() && degree(a) >= degree(b)) {
        size_t shift = a.size() - b.size();
        UPoly lead = a.back();
        for (auto& c : a)
            c = mul(c, lc);
        for (size_t k = 0; k < b.size(); ++k)
            a[k + shift] = sub(a[k + shift], mul(lead, b[k]));
        trim(a);
    }
    return a;
}

RPoly gcd(RPoly a, RPoly b) {
    if (a.empty())
        return primitive_part(b);
    if (b.empty())
        return primitive_part(a);
    UPoly ca = content(a);
    UPoly cb = content(b);
    UPoly c = gcd(ca, cb);
    a = divide_coefficients(a, ca);
    b = divide_coefficients(b, cb);
    if (degree(a) < degree(b))
        std::swap(a, b);
    while (!b.empty()) {
        RPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    for (auto& coeff : a)
        coeff = mul(coeff, c);
    return a;
}

BiPoly normalize_leading(const BiPoly& p) {
    if (p.is_zero())
        return p;
    return p.scaled(p.leading().second.inverse());
}

} // namespace

BiPoly gcd(const BiPoly& a, const BiPoly& b) {
    if (a.is_zero() && b.is_zero())
        return {};
    if (a.is_constant() && !a.is_zero())
        return BiPoly(1);
    if (b.is_constant() && !b.is_zero())
        return BiPoly(1);
    if (a.is_monomial() || b.is_monomial()) {
        // gcd with a monomial is the monomial of minimal shared exponents.
        const BiPoly& m = a.is_monomial() ? a : b;
        const BiPoly& o = a.is_monomial() ? b : a;
        if (o.is_zero())
            return normalize_leading(m);
        Exponent ex = m.leading().first;
        for (const auto& [eo, c] : o.terms()) {
            ex.e = std::min(ex.e, eo.e);
            ex.l = std::min(ex.l, eo.l);
        }
        return BiPoly::monomial(1, ex.e, ex.l);
    }
    return normalize_leading(from_recursive(gcd(to_recursive(a), to_recursive(b))));
}

BiPoly divide_exact(const BiPoly& a, const BiPoly& b) {
    if (b.is_zero())
        throw DivisionByZero("polynomial division by zero");
    if (a.is_zero())
        return {};
    if (b.is_monomial()) {
        const auto& [eb, cb] = b.leading();
        GaussianRational inv = cb.inverse();
        BiPoly q;
        for (const auto& [ea, ca] : a.terms()) {
            if (ea.e < eb.e || ea.l < eb.l)
                throw Error("inexact polynomial division");
            q.add_term({ea.e - eb.e, ea.l - eb.l}, ca * inv);
        }
        return q;
    }
    RPoly num = to_recursive(a);
    const RPoly den = to_recursive(b);
    RPoly quot(num.size() >= den.size() ? num.size() - den.size() + 1 : 0);
    while (!num.empty() && degree(num) >= degree(den)) {
        size_t shift = num.size() - den.size();
        auto [q, rem] = divmod(num.back(), den.back());
        if (!rem.empty())
            throw Error("inexact polynomial division");
        quot[shift] = q;
        for (size_t k = 0; k < den.size(); ++k)
            num[k + shift] = sub(num[k + shift], mul(q, den[k]));
        trim(num);
    }
    if (!num.empty())
        throw Error("inexact polynomial division");
    trim(quot);
    return from_recursive(quot);
}

// ---------------------------------------------------------------------------
// RationalFunction

RationalFunction::RationalFunction(const BiPoly& num) : num_(num), den_(1) {}

RationalFunction::RationalFunction(const BiPoly& num, const BiPoly& den) : num_(num), den_(den) {
    if (den_.is_zero())
        throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

void RationalFunction::canonicalize() {
    if (num_.is_zero()) {
        den_ = BiPoly(1);
        return;
    }
    if (!den_.is_constant()) {
        BiPoly g = gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = divide_exact(num_, g);
            den_ = divide_exact(den_, g);
        }
    }
    const GaussianRational& lc = den_.leading().second;
    if (!lc.is_one()) {
        GaussianRational inv = lc.inverse();
        num_ = num_.scaled(inv);
        den_ = den_.scaled(inv);
    }
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero())
        return *this;
    if (is_zero())
        return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (!den_.is_constant())
            canonicalize();
        else if (num_.is_zero())
            den_ = BiPoly(1);
        return *this;
    }
    num_ = num_ * o.den_ + o.num_ * den_;
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero() || o.is_zero())
        return *this = RationalFunction();
    num_ = num_ * o.num_;
    if (o.den_.is_constant() && den_.is_constant())
        return *this; // both denominators are 1
    den_ = den_ * o.den_;
    canonicalize();
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) { return *this *= o.inverse(); }

RationalFunction RationalFunction::operator-() const { return RationalFunction(Raw{}, -num_, den_); }

RationalFunction RationalFunction::inverse() const {
    if (is_zero())
        throw DivisionByZero("division by the zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(unsigned n) const {
    RationalFunction r(1);
    for (unsigned k = 0; k < n; ++k)
        r *= *this;
    return r;
}

std::string RationalFunction::to_string() const {
    if (den_.is_constant())
        return num_.to_string();
    std::string n = num_.to_string();
    if (!num_.is_monomial())
        n = "(" + n + ")";
    std::string d = den_.to_string();
    if (!den_.is_monomial() || !den_.leading().second.is_one())
        d = "(" + d + ")";
    return n + "/" + d;
}

bool is_zero(const RationalFunction& x) { return x.is_zero(); }

RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op) {
    switch (op) {
    case ArithOp::add:
        return a + b;
    case ArithOp::sub:
        return a - b;
    case ArithOp::mul:
        return a * b;
    case ArithOp::div:
        return a / b;
    }
    throw Error("unknown arithmetic operation");
}

bool rf_is_zero(const RationalFunction& a) { return a.is_zero(); }

GaussianRational rf_specialize(const RationalFunction& a, const GaussianRational& E0,
                               const GaussianRational& L0) {
    GaussianRational d = a.den().evaluate(E0, L0);
    if (d.is_zero())
        throw PoleError("pole at E=" + E0.to_string() + ", lambda=" + L0.to_string() +
                            ": denominator " + a.den().to_string() + " vanishes",
                        a.den().to_string());
    return a.num().evaluate(E0, L0) / d;
}

namespace {

RationalFunction substitute_poly(const BiPoly& p, const RationalFunction& forE,
                                 const RationalFunction& forL) {
    RationalFunction acc;
    for (const auto& [ex, c] : p.terms())
        acc += RationalFunction(c) * forE.pow(ex.e) * forL.pow(ex.l);
    return acc;
}

} // namespace

RationalFunction rf_substitute(const RationalFunction& a, const RationalFunction& forE,
                               const RationalFunction& forLambda) {
    RationalFunction d = substitute_poly(a.den(), forE, forLambda);
    if (d.is_zero())
        throw PoleError("substitution makes the denominator " + a.den().to_string() + " vanish",
                        a.den().to_string());
    return substitute_poly(a.num(), forE, forLambda) / d;
}

RationalFunction rf_recanonicalize(const RationalFunction& a) { return RationalFunction(a.num(), a.den()); }

// ---------------------------------------------------------------------------
// JSON

namespace {

nlohmann::json integer_json(const mpz_class& z) {
    if (z.fits_slong_p())
        return z.get_si();
    return z.get_str();
}

mpz_class integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return mpz_class(j.get<long>());
    if (j.is_string())
        return mpz_class(j.get<std::string>());
    throw Error("expected an integer in rational-function JSON");
}

} // namespace

nlohmann::json to_json(const GaussianRational& c) {
    return nlohmann::json::array({integer_json(c.re().get_num()), integer_json(c.re().get_den()),
                                  integer_json(c.im().get_num()), integer_json(c.im().get_den())});
}

nlohmann::json to_json(const BiPoly& p) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& [ex, c] : p.terms())
        arr.push_back(nlohmann::json::array({ex.e, ex.l, to_json(c)}));
    return arr;
}

nlohmann::json to_json(const RationalFunction& f) { return {{"num", to_json(f.num())}, {"den", to_json(f.den())}}; }

namespace {

BiPoly bipoly_from_json(const nlohmann::json& arr) {
    BiPoly p;
    for (const auto& t : arr) {
        const auto& c = t.at(2);
        mpq_class re(integer_from_json(c.at(0)), integer_from_json(c.at(1)));
        mpq_class im(integer_from_json(c.at(2)), integer_from_json(c.at(3)));
        p.add_term({t.at(0).get<unsigned>(), t.at(1).get<unsigned>()}, GaussianRational(re, im));
    }
    return p;
}

} // namespace

RationalFunction rational_function_from_json(const nlohmann::json& j) {
    return RationalFunction(bipoly_from_json(j.at("num")), bipoly_from_json(j.at("den")));
}

} // namespace z2tk
