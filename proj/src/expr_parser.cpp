#include "z2tk/expr_parser.hpp"

#include <cctype>

namespace z2tk {

namespace {

class Parser {
  public:
    explicit Parser(std::string_view text) : text_(text) {}

    LinearCombination parse() {
        LinearCombination r = expression();
        skip_space();
        if (pos_ != text_.size())
            fail("unexpected character");
        return r;
    }

  private:
    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError(why + " at position " + std::to_string(pos_) + " in \"" + std::string(text_) + "\"");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
            ++pos_;
    }

    bool accept(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    static bool is_scalar(const LinearCombination& x) {
        return x.empty() || (x.size() == 1 && x.begin()->first.empty());
    }

    static RationalFunction scalar_of(const LinearCombination& x) {
        auto it = x.find("");
        return it == x.end() ? RationalFunction() : it->second;
    }

    static void add_into(LinearCombination& acc, const LinearCombination& x, bool negate) {
        for (const auto& [k, v] : x) {
            RationalFunction& slot = acc[k];
            slot += negate ? -v : v;
            if (slot.is_zero())
                acc.erase(k);
        }
    }

    static LinearCombination scale(const LinearCombination& x, const RationalFunction& s) {
        LinearCombination r;
        if (s.is_zero())
            return r;
        for (const auto& [k, v] : x)
            r[k] = v * s;
        return r;
    }

    LinearCombination expression() {
        LinearCombination acc;
        bool negate = false;
        skip_space();
        if (accept('-'))
            negate = true;
        else
            accept('+');
        add_into(acc, term(), negate);
        for (;;) {
            if (accept('+'))
                add_into(acc, term(), false);
            else if (accept('-'))
                add_into(acc, term(), true);
            else
                break;
        }
        return acc;
    }

    LinearCombination term() {
        LinearCombination acc = power();
        for (;;) {
            if (accept('*')) {
                LinearCombination rhs = power();
                if (is_scalar(rhs))
                    acc = scale(acc, scalar_of(rhs));
                else if (is_scalar(acc))
                    acc = scale(rhs, scalar_of(acc));
                else
                    fail("product of two symbols");
            } else if (accept('/')) {
                LinearCombination rhs = power();
                if (!is_scalar(rhs))
                    fail("division by a symbol");
                RationalFunction d = scalar_of(rhs);
                if (d.is_zero())
                    throw DivisionByZero("division by zero in \"" + std::string(text_) + "\"");
                acc = scale(acc, d.inverse());
            } else {
                break;
            }
        }
        return acc;
    }

    LinearCombination power() {
        LinearCombination base = factor();
        if (accept('^')) {
            skip_space();
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            if (start == pos_)
                fail("expected exponent");
            if (!is_scalar(base))
                fail("power of a symbol");
            unsigned n = static_cast<unsigned>(std::stoul(std::string(text_.substr(start, pos_ - start))));
            return {{"", scalar_of(base).pow(n)}};
        }
        return base;
    }

    LinearCombination factor() {
        skip_space();
        if (pos_ >= text_.size())
            fail("unexpected end of input");
        char c = text_[pos_];
        if (c == '(') {
            ++pos_;
            LinearCombination r = expression();
            if (!accept(')'))
                fail("expected ')'");
            return r;
        }
        if (c == '-') {
            ++pos_;
            return scale(factor(), RationalFunction(-1));
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
                ++pos_;
            mpz_class z(std::string(text_.substr(start, pos_ - start)));
            return {{"", RationalFunction(GaussianRational(mpq_class(z)))}};
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
                ++pos_;
            std::string id(text_.substr(start, pos_ - start));
            if (id == "E")
                return {{"", RationalFunction::E()}};
            if (id == "lambda")
                return {{"", RationalFunction::lambda()}};
            if (id == "i")
                return {{"", RationalFunction::i()}};
            return {{id, RationalFunction(1)}};
        }
        fail(std::string("unexpected character '") + c + "'");
    }

    std::string_view text_;
    size_t pos_ = 0;
};

} // namespace

LinearCombination parse_linear_combination(std::string_view text) { return Parser(text).parse(); }

RationalFunction parse_rational_function(std::string_view text) {
    LinearCombination lc = parse_linear_combination(text);
    RationalFunction r;
    for (const auto& [k, v] : lc) {
        if (!k.empty())
            throw ParseError("unexpected symbol '" + k + "' in scalar expression \"" + std::string(text) + "\"");
        r = v;
    }
    return r;
}

GaussianRational parse_gaussian_rational(std::string_view text) {
    RationalFunction r = parse_rational_function(text);
    if (!r.is_constant())
        throw ParseError("expected a Gaussian-rational constant, got \"" + std::string(text) + "\"");
    return r.num().constant_term() / r.den().constant_term();
}

} // namespace z2tk
