#include "z2tk/module_tools.hpp"

#include "z2tk/expr_parser.hpp"

#include <algorithm>
#include <functional>

namespace z2tk {

namespace {

const Point kGenericDE{GaussianRational::rational(3, 7), 0};
const Point kGenericDEl{GaussianRational::rational(3, 7), GaussianRational::rational(5, 11)};
// Point used by the misprint locator.
const Point kLocatorDE{3, 0};
const Point kLocatorDEl{3, 5};

const std::vector<Generator> kActing{Generator::Q10, Generator::Q10d, Generator::Q01, Generator::Q01d,
                                     Generator::Z};

RationalFunction to_rf(const GaussianRational& c) { return RationalFunction(c); }

Degree degree_from_name(const std::string& name) {
    for (Family f : {Family::sigma, Family::chi, Family::v, Family::u})
        if (name.rfind(name_of(f), 0) == 0)
            return degree_of(f);
    throw Error("cannot infer the degree of basis name " + name);
}

std::optional<Degree> homogeneous_degree(const MatrixRep& ambient, const Vector<RationalFunction>& v) {
    std::optional<Degree> d;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        if (d && !(*d == ambient.basis_degrees[k]))
            return std::nullopt;
        d = ambient.basis_degrees[k];
    }
    return d;
}

MatrixRep rep_from_table(const ActionTable& t) {
    MatrixRep r;
    r.dim = t.basis_names.size();
    r.basis_names = t.basis_names;
    for (const auto& n : t.basis_names)
        r.basis_degrees.push_back(degree_from_name(n));
    for (const auto& [g, imgs] : t.images)
        r.mats[g] = t.matrix(g);
    r.mats[Generator::H] = RepMatrix::identity(r.dim).scaled(RationalFunction::E());
    return r;
}

std::vector<Matrix<GaussianRational>> specialized_actions(const MatrixRep& rep, const Point& p) {
    std::vector<Matrix<GaussianRational>> out;
    for (const auto& m : action_matrices(rep))
        out.push_back(specialize(m, p.E0, p.L0));
    return out;
}

} // namespace

std::string Point::to_string() const { return "(" + E0.to_string() + "," + L0.to_string() + ")"; }

std::vector<RepMatrix> action_matrices(const MatrixRep& rep) {
    std::vector<RepMatrix> out;
    for (Generator g : kActing)
        out.push_back(rep.at(g));
    return out;
}

SymbolicSubspace rref_symbolic(const std::vector<Vector<RationalFunction>>& vectors, size_t dim) {
    return rref(vectors, dim);
}

NumericSubspace rref_specialized(const std::vector<Vector<RationalFunction>>& vectors, size_t dim, const Point& p) {
    std::vector<Vector<GaussianRational>> sv;
    for (const auto& v : vectors)
        sv.push_back(specialize(v, p.E0, p.L0));
    return rref(sv, dim);
}

SymbolicSubspace submodule_closure(const MatrixRep& rep, const std::vector<Vector<RationalFunction>>& seeds) {
    return closure(action_matrices(rep), seeds, rep.dim);
}

NumericSubspace submodule_closure(const MatrixRep& rep, const std::vector<Vector<RationalFunction>>& seeds,
                                  const Point& p) {
    std::vector<Vector<GaussianRational>> sv;
    for (const auto& v : seeds)
        sv.push_back(specialize(v, p.E0, p.L0));
    return closure(specialized_actions(rep, p), sv, rep.dim);
}

Vector<RationalFunction> parse_vector(const std::vector<std::string>& names, std::string_view expr) {
    Vector<RationalFunction> v(names.size());
    for (const auto& [sym, coeff] : parse_linear_combination(expr)) {
        auto it = std::find(names.begin(), names.end(), sym);
        if (it == names.end())
            throw ParseError("unknown basis name '" + sym + "' in \"" + std::string(expr) + "\"");
        v[static_cast<size_t>(it - names.begin())] += coeff;
    }
    return v;
}

std::string describe_vector(const std::vector<std::string>& names, const Vector<RationalFunction>& v) {
    std::string out;
    for (size_t k = 0; k < v.size(); ++k) {
        if (v[k].is_zero())
            continue;
        std::string term;
        std::string c = v[k].to_string();
        if (c == "1")
            term = names[k];
        else if (c == "-1")
            term = "-" + names[k];
        else if (c.find_first_of("+-/", 1) == std::string::npos)
            term = c + "*" + names[k];
        else
            term = "(" + c + ")*" + names[k];
        if (!out.empty())
            out += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
        else
            out = term;
    }
    return out.empty() ? "0" : out;
}

std::string describe_vector(const std::vector<std::string>& names, const Vector<GaussianRational>& v) {
    Vector<RationalFunction> r;
    for (const auto& c : v)
        r.push_back(to_rf(c));
    return describe_vector(names, r);
}

IrrepReport change_of_basis(const MatrixRep& ambient, const std::string& block, const std::string& display,
                            const std::vector<std::string>& names, const std::vector<Vector<RationalFunction>>& vectors,
                            const ActionTable* printed, const ActionTable* corrected, const Point& generic) {
    IrrepReport r;
    r.block = block;
    r.display = display;
    const size_t n = ambient.dim;
    const size_t m = vectors.size();
    r.dim = m;

    RepMatrix b = RepMatrix::from_columns(vectors, n);
    // Rows independent at the generic point are independent symbolically.
    Matrix<GaussianRational> bg = specialize(b, generic.E0, generic.L0);
    Echelon<GaussianRational> rows_e;
    rows_e.ambient_dim = m;
    std::vector<size_t> rows;
    for (size_t i = 0; i < n && rows.size() < m; ++i)
        if (rows_e.insert(bg.row(i)))
            rows.push_back(i);
    if (rows.size() < m)
        return r;
    r.basis_independent = true;

    std::vector<size_t> all_cols(m);
    for (size_t j = 0; j < m; ++j)
        all_cols[j] = j;
    RepMatrix bs = b.submatrix(rows, all_cols);

    r.rep.dim = m;
    r.rep.basis_names = names;
    for (const auto& v : vectors) {
        auto d = homogeneous_degree(ambient, v);
        if (!d)
            throw Error("basis vector of block " + block + " is not homogeneous");
        r.rep.basis_degrees.push_back(*d);
    }

    r.closure_passed = true;
    for (const auto& [g, mg] : ambient.mats) {
        RepMatrix t = mg * b;
        std::vector<size_t> tcols(t.cols());
        for (size_t j = 0; j < t.cols(); ++j)
            tcols[j] = j;
        auto x = solve(bs, t.submatrix(rows, tcols));
        if (!x)
            throw Error("internal: selected rows are singular");
        RepMatrix residual = b * *x - t;
        size_t bad = residual.nonzero_count();
        r.residual_nonzero += bad;
        if (bad != 0)
            r.closure_passed = false;
        r.rep.mats[g] = std::move(*x);
    }

    for (Generator g : kActing) {
        if (!r.rep.mats.count(g))
            continue;
        const RepMatrix& x = r.rep.mats.at(g);
        auto& col_text = r.action_table[g];
        for (size_t j = 0; j < m; ++j)
            col_text.push_back(describe_vector(names, x.column(j)));
    }

    if (printed || corrected) {
        r.matches_printed = printed != nullptr;
        r.matches_corrected = corrected != nullptr;
        for (const auto& [g, x] : r.rep.mats) {
            if (g == Generator::H)
                continue;
            std::optional<RepMatrix> pm, cm;
            if (printed && printed->images.count(g))
                pm = printed->matrix(g);
            if (corrected && corrected->images.count(g))
                cm = corrected->matrix(g);
            for (size_t j = 0; j < m; ++j) {
                Vector<RationalFunction> col = x.column(j);
                bool cok = !cm || cm->column(j) == col;
                if (!cok)
                    r.matches_corrected = false;
                if (pm && pm->column(j) != col) {
                    r.matches_printed = false;
                    TableDiff d{g, names[j], printed->images.at(g)[j], describe_vector(names, col), cm && cok,
                                corrected && corrected->images.count(g) ? corrected->images.at(g)[j] : ""};
                    r.diffs.push_back(std::move(d));
                }
            }
        }
    }

    r.relations_pass = r.closure_passed && verify_relations(r.rep).all_pass();
    return r;
}

bool DecompositionReport::all_closed() const {
    return !blocks.empty() &&
           std::all_of(blocks.begin(), blocks.end(), [](const IrrepReport& b) { return b.closure_passed; });
}

bool DecompositionReport::all_relations_pass() const {
    return !blocks.empty() &&
           std::all_of(blocks.begin(), blocks.end(), [](const IrrepReport& b) { return b.relations_pass; });
}

DecompositionReport decompose(const InducedModule& m, const std::vector<BlockCatalog>& catalog) {
    DecompositionReport rep;
    rep.rep = m.name;
    rep.ambient_dim = m.dim();
    const bool with_lambda = m.per_family == 8;
    const Point& generic = with_lambda ? kGenericDEl : kGenericDE;
    const Point& locator_point = with_lambda ? kLocatorDEl : kLocatorDE;

    std::vector<Vector<RationalFunction>> all_corrected, all_printed;
    for (const BlockCatalog& b : catalog) {
        std::vector<Vector<RationalFunction>> corrected, printed;
        for (const auto& s : b.corrected_vectors)
            corrected.push_back(m.vector(s));
        for (const auto& s : b.printed_vectors)
            printed.push_back(m.vector(s));
        all_corrected.insert(all_corrected.end(), corrected.begin(), corrected.end());
        all_printed.insert(all_printed.end(), printed.begin(), printed.end());

        rep.blocks.push_back(change_of_basis(m.rep, b.name, b.display, b.basis_names, corrected, &b.printed_table,
                                             &b.corrected_table, generic));
        if (b.printed_vectors != b.corrected_vectors) {
            rep.printed_blocks.push_back(change_of_basis(m.rep, b.name, b.display, b.basis_names, printed,
                                                         &b.printed_table, &b.corrected_table, generic));
            for (size_t k = 0; k < b.printed_vectors.size(); ++k)
                if (b.printed_vectors[k] != b.corrected_vectors[k])
                    rep.basis_errata.push_back(
                        {b.name, b.basis_names[k], b.printed_vectors[k], b.corrected_vectors[k]});
        }
        rep.locator.push_back(locate_misprints(m, b, locator_point));
    }
    rep.rank = rref_symbolic(all_corrected, m.dim()).dim();
    rep.printed_rank = rref_symbolic(all_printed, m.dim()).dim();
    return rep;
}

const DecompositionReport& decomposition_DE() {
    static const DecompositionReport r = decompose(build_DE(), catalog_DE());
    return r;
}

const DecompositionReport& decomposition_DEl() {
    static const DecompositionReport r = decompose(build_DEl(), catalog_DEl());
    return r;
}

const MatrixRep& block_rep(const std::string& name) {
    for (const auto* d : {&decomposition_DE(), &decomposition_DEl()})
        for (const auto& b : d->blocks)
            if (b.block == name) {
                if (!b.closure_passed)
                    throw Error("block " + name + " does not close");
                return b.rep;
            }
    throw Error("unknown block " + name);
}

std::vector<Matrix<GaussianRational>> hom_space(const MatrixRep& src, const MatrixRep& dst, const Point& p) {
    const size_t ns = src.dim, nd = dst.dim;
    // unknown index for each degree-compatible entry T(i, j)
    std::vector<std::vector<long>> id(nd, std::vector<long>(ns, -1));
    std::vector<std::pair<size_t, size_t>> unknowns;
    for (size_t i = 0; i < nd; ++i)
        for (size_t j = 0; j < ns; ++j)
            if (dst.basis_degrees[i] == src.basis_degrees[j]) {
                id[i][j] = static_cast<long>(unknowns.size());
                unknowns.emplace_back(i, j);
            }
    const size_t u = unknowns.size();

    Echelon<GaussianRational> eqs;
    eqs.ambient_dim = u;
    for (Generator g : kAllGenerators) {
        Matrix<GaussianRational> a = specialize(src.at(g), p.E0, p.L0);
        Matrix<GaussianRational> b = specialize(dst.at(g), p.E0, p.L0);
        // (b T - T a)(i, j) = 0
        for (size_t i = 0; i < nd; ++i)
            for (size_t j = 0; j < ns; ++j) {
                Vector<GaussianRational> row(u);
                bool any = false;
                for (size_t k = 0; k < nd; ++k)
                    if (id[k][j] >= 0 && !b(i, k).is_zero()) {
                        row[static_cast<size_t>(id[k][j])] += b(i, k);
                        any = true;
                    }
                for (size_t k = 0; k < ns; ++k)
                    if (id[i][k] >= 0 && !a(k, j).is_zero()) {
                        row[static_cast<size_t>(id[i][k])] -= a(k, j);
                        any = true;
                    }
                if (any)
                    eqs.insert(std::move(row));
            }
    }

    std::vector<bool> is_pivot(u, false);
    for (size_t q : eqs.pivots)
        is_pivot[q] = true;
    std::vector<Matrix<GaussianRational>> basis;
    for (size_t free = 0; free < u; ++free) {
        if (is_pivot[free])
            continue;
        Vector<GaussianRational> x(u);
        x[free] = 1;
        for (size_t r = 0; r < eqs.rows.size(); ++r)
            if (!eqs.rows[r][free].is_zero())
                x[eqs.pivots[r]] = -eqs.rows[r][free];
        Matrix<GaussianRational> t(nd, ns);
        for (size_t k = 0; k < u; ++k)
            t(unknowns[k].first, unknowns[k].second) = x[k];
        basis.push_back(std::move(t));
    }
    return basis;
}

IntertwinerReport intertwiner(const MatrixRep& a, const MatrixRep& b, const Point& p) {
    IntertwinerReport r;
    auto hs = hom_space(a, b, p);
    r.dim = hs.size();
    if (a.dim != b.dim || hs.empty())
        return r;
    const long weights[][4] = {{1, 2, 3, 5}, {1, -1, 7, 11}, {2, 3, -5, 13}};
    for (const auto& w : weights) {
        Matrix<GaussianRational> t(b.dim, a.dim);
        for (size_t k = 0; k < hs.size(); ++k)
            t += hs[k].scaled(GaussianRational(w[k % 4] + static_cast<long>(k / 4)));
        if (rank(t) == a.dim) {
            r.has_invertible = true;
            break;
        }
    }
    if (a.basis_degrees == b.basis_degrees) {
        const size_t n = a.dim;
        Echelon<GaussianRational> e;
        e.ambient_dim = n * n;
        auto flat = [n](const Matrix<GaussianRational>& t) {
            Vector<GaussianRational> v(n * n);
            for (size_t i = 0; i < n; ++i)
                for (size_t j = 0; j < n; ++j)
                    v[i * n + j] = t(i, j);
            return v;
        };
        for (const auto& t : hs)
            e.insert(flat(t));
        r.contains_identity = e.contains(flat(Matrix<GaussianRational>::identity(n)));
    }
    return r;
}

MisprintFinding locate_misprints(const InducedModule& m, const BlockCatalog& b, const Point& p) {
    MisprintFinding f;
    f.block = b.name;
    f.point = p;
    MatrixRep table = rep_from_table(b.corrected_table);
    auto hs = hom_space(table, m.rep, p);
    f.hom_dim = hs.size();
    const size_t cols = b.basis_names.size();
    const size_t n = m.dim();
    std::vector<Vector<GaussianRational>> printed;
    for (const auto& s : b.printed_vectors)
        printed.push_back(specialize(m.vector(s), p.E0, p.L0));

    const size_t k = hs.size();
    std::vector<bool> best_ok(cols, false);
    size_t best = 0;
    bool found = false;
    // Try every set of k columns as the anchor that pins the coefficients.
    std::vector<size_t> pick(k);
    std::function<void(size_t, size_t)> rec = [&](size_t depth, size_t start) {
        if (depth == k) {
            Echelon<GaussianRational> e;
            e.ambient_dim = k + 1;
            for (size_t c : pick)
                for (size_t i = 0; i < n; ++i) {
                    Vector<GaussianRational> row(k + 1);
                    for (size_t a = 0; a < k; ++a)
                        row[a] = hs[a](i, c);
                    row[k] = printed[c][i];
                    e.insert(std::move(row));
                }
            if (e.dim() != k || (k > 0 && e.pivots.back() != k - 1))
                return;
            Vector<GaussianRational> coef(k);
            for (size_t a = 0; a < k; ++a)
                coef[a] = e.rows[a][k];
            std::vector<bool> ok(cols);
            size_t count = 0;
            for (size_t c = 0; c < cols; ++c) {
                bool match = true;
                for (size_t i = 0; i < n && match; ++i) {
                    GaussianRational s;
                    for (size_t a = 0; a < k; ++a)
                        s += coef[a] * hs[a](i, c);
                    match = s == printed[c][i];
                }
                ok[c] = match;
                count += match ? 1 : 0;
            }
            if (!found || count > best) {
                found = true;
                best = count;
                best_ok = ok;
            }
            return;
        }
        for (size_t c = start; c < cols; ++c) {
            pick[depth] = c;
            rec(depth + 1, c + 1);
        }
    };
    if (k <= cols)
        rec(0, 0);
    std::vector<std::string> expected;
    for (size_t c = 0; c < cols; ++c) {
        if (!best_ok[c])
            f.mismatched.push_back(b.basis_names[c]);
        if (b.printed_vectors[c] != b.corrected_vectors[c])
            expected.push_back(b.basis_names[c]);
    }
    f.agrees_with_catalog = found && f.mismatched == expected;
    return f;
}

ProbeReport invariant_subspace_probe(const std::string& block, const Point& p, const GaussianRational& c1,
                                     const GaussianRational& c2) {
    if (block != "D1" && block != "D2")
        throw Error("probe block must be D1 or D2, got " + block);
    if (p.E0.is_zero())
        throw PoleError("E0 = 0 is a pole of the rescaled four-dimensional basis", "E");
    if (c1.is_zero() && c2.is_zero())
        throw Error("seed coefficients must not both vanish");

    ProbeReport r;
    r.block = block;
    r.point = p;
    r.c1 = c1;
    r.c2 = c2;

    const InducedModule& m = build_DEl();
    const BlockCatalog* cat = nullptr;
    for (const auto& b : catalog_DEl())
        if (b.name == block)
            cat = &b;
    Vector<RationalFunction> w1 = m.vector(cat->corrected_vectors[0]);
    Vector<RationalFunction> w2 = m.vector(cat->corrected_vectors[1]);
    Vector<RationalFunction> seed(m.dim());
    for (size_t k = 0; k < m.dim(); ++k)
        seed[k] = w1[k] * to_rf(c1) + w2[k] * to_rf(c2);

    NumericSubspace cl = submodule_closure(m.rep, {seed}, p);
    r.closure_dim = cl.dim();
    if (r.closure_dim == 4)
        for (const auto& row : cl.rows)
            r.invariant_basis.push_back(describe_vector(m.rep.basis_names, row));

    // Witnesses in block coordinates.
    const MatrixRep& br = block_rep(block);
    auto spec = [&](Generator g) { return specialize(br.at(g), p.E0, p.L0); };
    Vector<GaussianRational> w(8);
    w[0] = c1;
    w[1] = c2;
    Vector<GaussianRational> zw = spec(Generator::Z) * w;
    std::vector<std::pair<std::string, Vector<GaussianRational>>> wit{
        {"Q10 w", spec(Generator::Q10) * w},
        {"Q10d w", spec(Generator::Q10d) * w},
        {"Q01 Z w", spec(Generator::Q01) * zw},
        {"Q01d Z w", spec(Generator::Q01d) * zw}};
    Echelon<GaussianRational> span;
    span.ambient_dim = 8;
    for (const auto& [name, v] : wit) {
        r.witnesses.emplace_back(name, describe_vector(br.basis_names, v));
        span.insert(v);
    }
    r.witnesses_proportional = span.dim() <= 1;
    return r;
}

IrrepReport extract_irrep_4d(const std::string& name, bool rescaled) {
    const Irrep4Catalog* cat = nullptr;
    for (const auto& c : catalog_irrep4())
        if (c.name == name)
            cat = &c;
    if (!cat)
        throw Error("unknown four-dimensional irrep " + name + " (expected Phi1 or Phi2)");

    // Parent block restricted to the locus lambda = E^2.
    MatrixRep parent = block_rep(cat->parent);
    const RationalFunction e = RationalFunction::E();
    for (auto& [g, mat] : parent.mats)
        mat = mat.map([&](const RationalFunction& x) { return rf_substitute(x, e, e * e); });

    std::vector<Vector<RationalFunction>> vectors;
    for (size_t k = 0; k < cat->vectors.size(); ++k) {
        Vector<RationalFunction> v = parse_vector(parent.basis_names, cat->vectors[k]);
        if (rescaled) {
            RationalFunction s = parse_rational_function(cat->scale[k]);
            for (auto& x : v)
                x *= s;
        }
        vectors.push_back(std::move(v));
    }
    const ActionTable& table = rescaled ? cat->rescaled_table : cat->unscaled_table;
    const Point generic{GaussianRational::rational(3, 7), GaussianRational::rational(9, 49)};
    return change_of_basis(parent, name + (rescaled ? " rescaled" : ""), name, cat->basis_names, vectors, &table,
                           &table, generic);
}

} // namespace z2tk
