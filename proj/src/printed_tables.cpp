#include "z2tk/printed_tables.hpp"

#include "z2tk/expr_parser.hpp"

namespace z2tk {

RepMatrix ActionTable::matrix(Generator g) const {
    const size_t n = basis_names.size();
    RepMatrix m(n, n);
    auto it = images.find(g);
    if (it == images.end())
        throw Error("action table has no entry for " + std::string(name_of(g)));
    if (it->second.size() != n)
        throw Error("action table for " + std::string(name_of(g)) + " has the wrong length");
    for (size_t col = 0; col < n; ++col) {
        for (const auto& [sym, coeff] : parse_linear_combination(it->second[col])) {
            size_t row = n;
            for (size_t k = 0; k < n; ++k)
                if (basis_names[k] == sym)
                    row = k;
            if (row == n)
                throw Error("unknown block basis name '" + sym + "' in action table");
            m(row, col) += coeff;
        }
    }
    return m;
}

namespace {

using G = Generator;
using Strings = std::vector<std::string>;

const Strings kNames4{"v", "u", "chi", "sigma"};
const Strings kNames8{"v1", "v2", "u1", "u2", "chi1", "chi2", "sigma1", "sigma2"};
const Strings kZero4{"0", "0", "0", "0"};

ActionTable table4(Strings q10, Strings q10d, Strings q01, Strings q01d, Strings z = kZero4) {
    return {kNames4, {{G::Q10, q10}, {G::Q10d, q10d}, {G::Q01, q01}, {G::Q01d, q01d}, {G::Z, z}}};
}

ActionTable table8(Strings q10, Strings q10d, Strings q01, Strings q01d, Strings z) {
    return {kNames8, {{G::Q10, q10}, {G::Q10d, q10d}, {G::Q01, q01}, {G::Q01d, q01d}, {G::Z, z}}};
}

// Action shapes shared by several D(E) blocks.
const Strings kA{"E*chi", "0", "0", "E*u"};
const Strings kB{"0", "sigma", "v", "0"};
const Strings kC{"E*sigma", "0", "E*u", "0"};
const Strings kD{"0", "chi", "0", "v"};

ActionTable table_D1() {
    return table8({"chi1", "0", "sigma2", "0", "0", "v2", "u2", "0"},
                  {"0", "i*chi1+E*chi2", "0", "E*sigma1+i*lambda*sigma2", "E*v1", "-i*v1", "-i*lambda*u1", "E*u1"},
                  {"sigma1", "0", "chi2", "0", "u2", "0", "0", "v2"},
                  {"0", "-i*sigma1+E*sigma2", "0", "E*chi1-i*lambda*chi2", "i*lambda*u1", "E*u1", "E*v1", "i*v1"},
                  {"lambda*u1", "u2", "v1", "lambda*v2", "-lambda*sigma2", "-sigma1", "-lambda*chi2", "-chi1"});
}

ActionTable table_D2(bool printed) {
    return table8({"-E*chi1", "-i*lambda*chi1", "0", "i*sigma1", "0", "v1+i/lambda*E*v2", "0", "u1"},
                  {"0", "-i*lambda*chi2", "E*sigma2", "sigma2", "-v1", "0", printed ? "i*u1-i*E*u1" : "i*u1-i*E*u2",
                   "0"},
                  {"sigma1", "0", "-i*lambda*chi1", "0", "0", "-i*u2", "0", "v2"},
                  {"i/lambda*(lambda-E^2)*sigma2", "E*sigma2", "i*lambda*chi2", "i*E*chi2", "i/lambda*E*u1-i*u2", "0",
                   "E*v1-i/lambda*(lambda-E^2)*v2", "0"},
                  {"-u1+E*u2", "i*lambda*u2", "-lambda*v1-i*E*v2", "-i*v2", "i*sigma1", "sigma2", "-i*lambda*chi1",
                   "lambda*chi2"});
}

BlockCatalog block(std::string name, std::string display, Strings names, Strings printed, Strings corrected,
                   ActionTable tp, ActionTable tc) {
    return {std::move(name), std::move(display), std::move(names), std::move(printed), std::move(corrected),
            std::move(tp), std::move(tc)};
}

} // namespace

const std::vector<BlockCatalog>& catalog_DE() {
    static const std::vector<BlockCatalog> c = [] {
        std::vector<BlockCatalog> r;
        Strings b1{"E^2*v1-E*v2-v4", "u1", "2*E*chi1-chi4", "2*E*sigma1-sigma3"};
        r.push_back(block("DE1", "Psi^(1)", kNames4, b1, b1, table4(kA, kB, kC, kD), table4(kA, kB, kC, kD)));
        // printed sigma component has sigma3; the block only closes with sigma4
        Strings b2p{"E^2*v1+E*v3-v4", "u2", "2*E*chi2-chi3", "2*E*sigma2-sigma3"};
        Strings b2c{"E^2*v1+E*v3-v4", "u2", "2*E*chi2-chi3", "2*E*sigma2-sigma4"};
        r.push_back(block("DE2", "Psi^(2)", kNames4, b2p, b2c, table4(kB, kA, kD, kC), table4(kB, kA, kD, kC)));
        Strings b3{"E*(v2-v3)+v4", "u3", "chi3", "sigma3"};
        r.push_back(block("DE3", "Psi^(3)", kNames4, b3, b3, table4(kB, kA, kC, kD), table4(kB, kA, kC, kD)));
        Strings b4{"v4", "u4", "chi4", "sigma4"};
        r.push_back(block("DE4", "Psi^(4)", kNames4, b4, b4, table4(kA, kB, {"0", "chi", "0", "u"}, kC),
                          table4(kA, kB, kD, kC)));
        return r;
    }();
    return c;
}

const std::vector<BlockCatalog>& catalog_DEl() {
    static const std::vector<BlockCatalog> c = [] {
        std::vector<BlockCatalog> r;
        Strings d1{"v6",
                   "-1/2*(lambda-2*E^2)*v1+E*v3-v4+i/2*(v7-v8)",
                   "u2",
                   "i*lambda/2*(u3-u4)-1/2*(lambda-2*E^2)*u5+E*u7-u8",
                   "i*lambda*chi2+2*E*chi6-chi8",
                   "2*E*chi2-chi3-i*chi6",
                   "-i*lambda*sigma2+2*E*sigma6-sigma7",
                   "2*E*sigma2-sigma4+i*sigma6"};
        r.push_back(block("D1", "Psi^(1)", kNames8, d1, d1, table_D1(), table_D1()));

        Strings d1tp{"lambda/2*(lambda-2*E^2)*v1+lambda*E*v2+lambda*v4+i/2*lambda*(v7-v8)",
                     "(lambda-E^2)*v5",
                     "i/2*lambda*(u3-u4)+1/2*(lambda-2*E^2)*u5+E*u6+u8",
                     "lambda*(lambda-E^2)*u1",
                     "lambda*(lambda-E^2)*chi1+lambda*E*(chi4-i*chi5)+i*lambda*chi7",
                     "i*(lambda-E^2)*(2*E*chi1-chi4-i*chi5)",
                     "-E*(lambda-2*E^2)*sigma1-E^2*(sigma3-sigma5)-E*sigma8",
                     "-i*lambda*E*sigma1+i*lambda*sigma3+(lambda-2*E^2)*sigma5+E*sigma8"};
        Strings d1tc = d1tp;
        d1tc[4] = "lambda*(lambda-2*E^2)*chi1+lambda*E*(chi4-i*chi5)+i*lambda*chi7";
        d1tc[5] = "i*lambda*E*chi1-i*lambda*chi4+(lambda-2*E^2)*chi5+E*chi7";
        d1tc[6] = "lambda*(lambda-2*E^2)*sigma1+lambda*E*sigma3+i*lambda*E*sigma5-i*lambda*sigma8";
        r.push_back(block("D1t", "Psi~^(1)", kNames8, d1tp, d1tc, table_D1(), table_D1()));

        Strings d2p{"-lambda/2*v1+E*v2+v4-i/lambda*(lambda-2*E^2)*v7-i/2*v8",
                    "i*lambda*v3-E*v7",
                    "lambda/2*(i*u3+i*u4+u5)-E*(u6-u7)-u8",
                    "i*E*u3+u7",
                    "E*chi1-chi4+i*chi5-i/lambda*E*chi7",
                    "chi3-i*chi6",
                    "-lambda*sigma1+E*(sigma3+i*sigma5)-i*sigma8",
                    "i*lambda*sigma2-sigma7"};
        Strings d2c = d2p;
        d2c[0] = "-lambda/2*v1+E*v2+v4-i/(2*lambda)*(lambda-2*E^2)*v7-i/2*v8";
        r.push_back(block("D2", "Psi^(2)", kNames8, d2p, d2c, table_D2(true), table_D2(false)));

        Strings d2tp{"-i*lambda/2*E*v1+i*lambda*v2+i*E*v4-E/2*v7+(1-E/2+E^2/lambda-E^3/lambda)*v8",
                     "lambda^2/2*v1-lambda*v4-i/2*v7-i*(lambda/2-E+E^2)*v8",
                     "-lambda*E*u4-i*lambda*u6",
                     "-lambda/2*(u3+u4+i*u5)+i*u8",
                     "i*lambda*chi1-i*E*chi4-E*chi5+chi7",
                     "i*lambda*chi2+chi8",
                     "-i*lambda*E*sigma1+i*lambda*sigma3-lambda*sigma5+E*sigma8",
                     "-lambda*sigma4-i*lambda*sigma6"};
        Strings d2tc = d2tp;
        d2tc[0] = "-i*lambda/2*E*v1+i*lambda*v2+i*E*v4-E/2*v7+E/2*v8";
        d2tc[1] = "lambda^2/2*v1-lambda*v4-i*lambda/2*(v7+v8)";
        r.push_back(block("D2t", "Psi~^(2)", kNames8, d2tp, d2tc, table_D2(true), table_D2(false)));
        return r;
    }();
    return c;
}

const std::vector<Irrep4Catalog>& catalog_irrep4() {
    static const std::vector<Irrep4Catalog> c = [] {
        std::vector<Irrep4Catalog> r;
        r.push_back({"Phi1",
                     "D1",
                     kNames4,
                     {"v2", "u2", "i*chi1+E*chi2", "-i*sigma1+E*sigma2"},
                     {"1", "1/E", "-1", "-i"},
                     {kNames4,
                      {{G::Q10, {"0", "0", "E*v", "-i*u"}},
                       {G::Q10d, {"chi", "i*E*sigma", "0", "0"}},
                       {G::Q01, {"0", "0", "i*u", "E*v"}},
                       {G::Q01d, {"sigma", "-i*E*chi", "0", "0"}},
                       {G::Z, {"u", "E^2*v", "-i*E*sigma", "i*E*chi"}}}},
                     {kNames4,
                      {{G::Q10, {"0", "0", "-E*v", "-E*u"}},
                       {G::Q10d, {"-chi", "-sigma", "0", "0"}},
                       {G::Q01, {"0", "0", "-i*E*u", "-i*E*v"}},
                       {G::Q01d, {"i*sigma", "i*chi", "0", "0"}},
                       {G::Z, {"E*u", "E*v", "-E*sigma", "-E*chi"}}}}});
        r.push_back({"Phi2",
                     "D2",
                     kNames4,
                     {"v1", "1/E*u1-u2", "chi1", "sigma1"},
                     {"1/E", "-1/E", "-1", "-i/E"},
                     {kNames4,
                      {{G::Q10, {"-E*chi", "-i*sigma", "0", "0"}},
                       {G::Q10d, {"0", "0", "-v", "i*E*u"}},
                       {G::Q01, {"sigma", "-i*E*chi", "0", "0"}},
                       {G::Q01d, {"0", "0", "i*u", "E*v"}},
                       {G::Z, {"-E*u", "-E*v", "i*sigma", "-i*E^2*chi"}}}},
                     {kNames4,
                      {{G::Q10, {"chi", "-sigma", "0", "0"}},
                       {G::Q10d, {"0", "0", "E*v", "-E*u"}},
                       {G::Q01, {"i*sigma", "-i*chi", "0", "0"}},
                       {G::Q01d, {"0", "0", "i*E*u", "-i*E*v"}},
                       {G::Z, {"E*u", "E*v", "E*sigma", "E*chi"}}}}});
        return r;
    }();
    return c;
}

} // namespace z2tk
