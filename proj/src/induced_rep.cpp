#include "z2tk/induced_rep.hpp"

#include "z2tk/expr_parser.hpp"

#include <array>
#include <cctype>

namespace z2tk {

namespace {

using Column = std::array<const char*, 8>;

struct Table {
    Generator gen;
    std::array<Column, 4> images; // indexed by family
};

// Image of each basis vector, read off the transcribed generator tables. Column k of family f is
// the image of f_{k+1}.
const std::array<Table, 5> kTables{{
    {Generator::Q10,
     {{{"chi1", "-E*chi1", "-E*chi1+chi4-i*chi5", "E*(chi4-i*chi5)+i/2*chi7", "0",
        "i*lambda*chi2+2*E*chi6-chi8", "chi7", "i*lambda*chi1"},
       {"0", "2*E*sigma2-sigma4+i*sigma6", "sigma3", "i*sigma5", "sigma5", "-E*sigma5",
        "-i*lambda*sigma1+sigma8-E*sigma5", "E*(-i*lambda*sigma1+sigma8)+i/2*lambda*sigma3"},
       {"0", "1/2*(E*v1+v2)", "E*(v2-v3)+v4-i/2*v7", "i/2*v5", "1/2*v5", "1/2*(-i*lambda*v1+v8)", "0",
        "-i/2*lambda*(E*v1-v2)+E*v8"},
       {"1/2*u1", "1/2*(u4-i*u5)", "0", "E*u4-i/2*(E*u5-u6)", "0", "1/2*(E*u5+u6)",
        "-i/2*lambda*u3+E*(u6-u7)+u8", "i/2*lambda*u1"}}}},
    {Generator::Q10d,
     {{{"chi2", "E*chi2", "E*chi2-chi3+i*chi6", "i/2*chi8", "i*lambda*chi1+2*E*chi5-chi7", "0",
        "i*lambda*chi2", "chi8"},
       {"2*E*sigma1-sigma3+i*sigma5", "0", "i*sigma6", "sigma4", "sigma6", "E*sigma6",
        "i*lambda*sigma2+E*sigma6-sigma7", "i/2*lambda*sigma4"},
       {"1/2*(E*v1-v2)", "0", "i/2*v6", "v4-i/2*v8", "1/2*(-i*lambda*v1+v7)", "1/2*v6",
        "-i/2*lambda*(E*v1+v2)+E*v7", "0"},
       {"1/2*(u3-i*u5)", "1/2*u2", "E*u3-i/2*(E*u5+u6)", "0", "1/2*(E*u5-u6)", "0", "i/2*lambda*u2",
        "u8-i/2*lambda*u4"}}}},
    {Generator::Q01,
     {{{"sigma1", "-E*sigma1+sigma3+i*sigma5", "-E*sigma1", "-i/2*sigma8", "0",
        "-i*lambda*sigma2+2*E*sigma6-sigma7", "-i*lambda*sigma1", "sigma8"},
       {"0", "2*E*chi2-chi3-i*chi6", "-i*chi5", "chi4", "chi5", "i*lambda*chi1-E*chi5+chi7", "-E*chi5",
        "-i/2*lambda*chi4"},
       {"1/2*u1", "1/2*(u3+i*u5)", "E*u3+i/2*(E*u5-u7)", "0", "0", "1/2*(E*u5+u7)", "-i/2*lambda*u1",
        "i/2*lambda*u4+u8"},
       {"0", "1/2*(E*v1+v3)", "-i/2*v5", "v4+i/2*v8", "1/2*v5", "1/2*(i*lambda*v1+v7)",
        "E*v7+i/2*lambda*(E*v1-v3)", "0"}}}},
    {Generator::Q01d,
     {{{"sigma2", "E*sigma2-sigma4-i*sigma6", "E*sigma2", "E*(sigma4+i*sigma6)-i/2*sigma7",
        "-i*lambda*sigma1+2*E*sigma5-sigma8", "0", "sigma7", "-i*lambda*sigma2"},
       {"2*E*chi1-chi4-i*chi5", "0", "chi3", "-i*chi6", "chi6", "-i*lambda*chi2+E*chi6-chi8", "E*chi6",
        "i*lambda*(E*chi2-1/2*chi3)+E*chi8"},
       {"1/2*(u4+i*u5)", "1/2*u2", "0", "E*u4+i/2*(E*u5+u7)", "1/2*(E*u5-u7)", "0",
        "i/2*lambda*u3+E*(u6-u7)+u8", "-i/2*lambda*u2"},
       {"1/2*(E*v1-v3)", "0", "E*(v2-v3)+v4+i/2*v7", "-i/2*v6", "1/2*(i*lambda*v1+v8)", "1/2*v6", "0",
        "i/2*lambda*(E*v1+v3)+E*v8"}}}},
    {Generator::Z,
     {{{"u5", "u6", "u7", "u8", "lambda*u1", "lambda*u2", "lambda*u3", "lambda*u4"},
       {"v5", "v6", "v7", "v8", "lambda*v1", "lambda*v2", "lambda*v3", "lambda*v4"},
       {"-sigma5", "-sigma6", "-sigma7", "-sigma8", "-lambda*sigma1", "-lambda*sigma2", "-lambda*sigma3",
        "-lambda*sigma4"},
       {"-chi5", "-chi6", "-chi7", "-chi8", "-lambda*chi1", "-lambda*chi2", "-lambda*chi3", "-lambda*chi4"}}}},
}};

InducedModule empty_module(std::string name, int per_family) {
    InducedModule m;
    m.name = std::move(name);
    m.per_family = per_family;
    for (Family f : kAllFamilies)
        for (int k = 1; k <= per_family; ++k)
            m.labels.push_back({f, k});
    m.rep.dim = m.labels.size();
    for (const auto& l : m.labels) {
        m.rep.basis_degrees.push_back(l.degree());
        m.rep.basis_names.push_back(l.to_string());
    }
    return m;
}

// Fills every generator matrix from the transcribed tables. Images of dropped labels
// (index > per_family) are treated as zero, and lambda is replaced by lam.
void fill_from_tables(InducedModule& m, const RationalFunction& lam) {
    const size_t n = m.dim();
    for (const Table& t : kTables) {
        RepMatrix mat(n, n);
        for (size_t col = 0; col < n; ++col) {
            const BasisLabel& src = m.labels[col];
            const char* text = t.images[static_cast<size_t>(src.family)][static_cast<size_t>(src.index - 1)];
            for (const auto& [sym, coeff] : parse_linear_combination(text)) {
                if (sym.empty())
                    throw Error("table image has a scalar part: " + std::string(text));
                BasisLabel target = [&] {
                    for (Family f : kAllFamilies) {
                        std::string_view fn = name_of(f);
                        if (sym.size() > fn.size() && sym.compare(0, fn.size(), fn) == 0 &&
                            std::isdigit(static_cast<unsigned char>(sym[fn.size()])))
                            return BasisLabel{f, std::stoi(sym.substr(fn.size()))};
                    }
                    throw Error("unknown basis label in the tables: " + sym);
                }();
                if (target.index > m.per_family)
                    continue;
                mat(m.index_of(target.to_string()), col) = rf_substitute(coeff, RationalFunction::E(), lam);
            }
        }
        m.rep.mats[t.gen] = std::move(mat);
    }
    m.rep.mats[Generator::H] = RepMatrix::identity(n).scaled(RationalFunction::E());
}

} // namespace

std::string_view name_of(Family f) {
    switch (f) {
    case Family::v:
        return "v";
    case Family::u:
        return "u";
    case Family::chi:
        return "chi";
    case Family::sigma:
        return "sigma";
    }
    return "?";
}

size_t InducedModule::index_of(std::string_view label) const {
    for (size_t k = 0; k < labels.size(); ++k)
        if (labels[k].to_string() == label)
            return k;
    throw Error("no basis vector named " + std::string(label) + " in " + name);
}

Vector<RationalFunction> InducedModule::vector(std::string_view expr) const {
    Vector<RationalFunction> v(dim());
    for (const auto& [sym, coeff] : parse_linear_combination(expr)) {
        if (sym.empty())
            throw ParseError("vector expression has a scalar part: " + std::string(expr));
        v[index_of(sym)] += coeff;
    }
    return v;
}

std::string InducedModule::describe(const Vector<RationalFunction>& v) const {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        if (!out.empty())
            out += " + ";
        if (v[k] == RationalFunction(1))
            out += labels[k].to_string();
        else
            out += "(" + v[k].to_string() + ")*" + labels[k].to_string();
    }
    return out.empty() ? "0" : out;
}

const InducedModule& build_DEl() {
    static const InducedModule m = [] {
        InducedModule r = empty_module("DEl", 8);
        fill_from_tables(r, RationalFunction::lambda());
        return r;
    }();
    return m;
}

const InducedModule& build_DE() {
    static const InducedModule m = [] {
        InducedModule r = empty_module("DE", 4);
        fill_from_tables(r, RationalFunction(0));
        return r;
    }();
    return m;
}

RepMatrix casimir_eval(const InducedModule& m) {
    const RepMatrix& z = m.rep.at(Generator::Z);
    return z * z;
}

std::string_view table_entry(Generator g, std::string_view label) {
    for (const Table& t : kTables) {
        if (t.gen != g)
            continue;
        for (Family f : kAllFamilies) {
            std::string_view fn = name_of(f);
            if (label.size() == fn.size() + 1 && label.substr(0, fn.size()) == fn) {
                int k = label.back() - '0';
                if (k >= 1 && k <= 8)
                    return t.images[static_cast<size_t>(f)][static_cast<size_t>(k - 1)];
            }
        }
    }
    throw Error("no table entry for " + std::string(name_of(g)) + " " + std::string(label));
}

} // namespace z2tk
