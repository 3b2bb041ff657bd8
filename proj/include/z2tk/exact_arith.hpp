#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

namespace z2tk {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
  public:
    using Error::Error;
};

/// Raised when a specialization hits a zero denominator.
class PoleError : public Error {
  public:
    PoleError(const std::string& what, std::string denominator)
        : Error(what), denominator_(std::move(denominator)) {}
    const std::string& denominator() const noexcept { return denominator_; }

  private:
    std::string denominator_;
};

/// re + i*im with both parts exact rationals.
class GaussianRational {
  public:
    GaussianRational() = default;
    GaussianRational(long n) : re_(n) {}
    GaussianRational(mpq_class re, mpq_class im = 0);
    static GaussianRational rational(long num, long den);
    static GaussianRational i() { return GaussianRational(0, 1); }

    const mpq_class& re() const noexcept { return re_; }
    const mpq_class& im() const noexcept { return im_; }
    bool is_zero() const noexcept { return sgn(re_) == 0 && sgn(im_) == 0; }
    bool is_one() const noexcept { return re_ == 1 && sgn(im_) == 0; }
    bool is_real() const noexcept { return sgn(im_) == 0; }

    GaussianRational conj() const { return {re_, -im_}; }
    GaussianRational inverse() const;

    GaussianRational& operator+=(const GaussianRational& o);
    GaussianRational& operator-=(const GaussianRational& o);
    GaussianRational& operator*=(const GaussianRational& o);
    GaussianRational& operator/=(const GaussianRational& o);

    friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
    friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
    friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
    friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
    GaussianRational operator-() const { return {-re_, -im_}; }

    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re_ == b.re_ && a.im_ == b.im_;
    }

    /// Canonical text, e.g. "3/2", "-i", "1/2-3*i".
    std::string to_string() const;

  private:
    mpq_class re_{0};
    mpq_class im_{0};
};

bool is_zero(const GaussianRational& x);

/// Exponent pair (degree in E, degree in lambda); ordered lexicographically.
struct Exponent {
    unsigned e = 0;
    unsigned l = 0;
    auto operator<=>(const Exponent&) const = default;
};

/// Polynomial in E and lambda with Gaussian-rational coefficients.
/// Never stores a zero coefficient.
class BiPoly {
  public:
    using Terms = std::map<Exponent, GaussianRational>;

    BiPoly() = default;
    BiPoly(const GaussianRational& c);
    BiPoly(long c) : BiPoly(GaussianRational(c)) {}
    static BiPoly monomial(const GaussianRational& c, unsigned e, unsigned l);
    static BiPoly E() { return monomial(1, 1, 0); }
    static BiPoly lambda() { return monomial(1, 0, 1); }

    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    bool is_monomial() const noexcept { return terms_.size() == 1; }
    GaussianRational constant_term() const;
    /// Term with the greatest (degE, degL) pair. Requires a nonzero polynomial.
    const Terms::value_type& leading() const { return *terms_.rbegin(); }
    unsigned degree_E() const noexcept;
    unsigned degree_lambda() const noexcept;

    void add_term(const Exponent& ex, const GaussianRational& c);

    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    BiPoly operator-() const;
    BiPoly scaled(const GaussianRational& c) const;
    friend bool operator==(const BiPoly&, const BiPoly&) = default;

    GaussianRational evaluate(const GaussianRational& E0, const GaussianRational& L0) const;
    std::string to_string() const;

  private:
    Terms terms_;
};

/// Greatest common divisor, normalized so the leading coefficient is 1.
BiPoly gcd(const BiPoly& a, const BiPoly& b);
/// Exact quotient a / b. Throws Error if b does not divide a.
BiPoly divide_exact(const BiPoly& a, const BiPoly& b);

/// Element of the fraction field Q(i)(E, lambda), kept in canonical form:
/// numerator and denominator coprime, denominator's leading coefficient 1.
class RationalFunction {
  public:
    RationalFunction() : den_(1) {}
    RationalFunction(const BiPoly& num);
    RationalFunction(const BiPoly& num, const BiPoly& den);
    RationalFunction(const GaussianRational& c) : RationalFunction(BiPoly(c)) {}
    RationalFunction(long c) : RationalFunction(BiPoly(c)) {}

    static RationalFunction E() { return RationalFunction(BiPoly::E()); }
    static RationalFunction lambda() { return RationalFunction(BiPoly::lambda()); }
    static RationalFunction i() { return RationalFunction(GaussianRational::i()); }

    const BiPoly& num() const noexcept { return num_; }
    const BiPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_constant() const noexcept { return num_.is_constant() && den_.is_constant(); }
    bool is_polynomial() const noexcept { return den_.is_constant(); }

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    RationalFunction operator-() const;
    RationalFunction inverse() const;
    RationalFunction pow(unsigned n) const;

    /// Structural equality; valid because the representation is canonical.
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    std::string to_string() const;

  private:
    struct Raw {};
    RationalFunction(Raw, BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    void canonicalize();

    BiPoly num_;
    BiPoly den_;
};

bool is_zero(const RationalFunction& x);

enum class ArithOp { add, sub, mul, div };
RationalFunction rf_arith(const RationalFunction& a, const RationalFunction& b, ArithOp op);
bool rf_is_zero(const RationalFunction& a);
/// Exact evaluation at E = E0, lambda = L0; throws PoleError on a vanishing denominator.
GaussianRational rf_specialize(const RationalFunction& a, const GaussianRational& E0,
                               const GaussianRational& L0);
/// Replaces E and lambda by the given rational functions.
RationalFunction rf_substitute(const RationalFunction& a, const RationalFunction& forE,
                               const RationalFunction& forLambda);
/// Re-runs canonicalization from scratch (used to test idempotence).
RationalFunction rf_recanonicalize(const RationalFunction& a);

nlohmann::json to_json(const GaussianRational& c);
nlohmann::json to_json(const BiPoly& p);
nlohmann::json to_json(const RationalFunction& f);
RationalFunction rational_function_from_json(const nlohmann::json& j);

} // namespace z2tk
