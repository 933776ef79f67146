#include "germlab/tangent.hpp"

#include <stdexcept>

#include "germlab/linalg.hpp"

namespace germlab {

std::string group_name(Group g) {
    switch (g) {
        case Group::GL: return "gl";
        case Group::SL: return "sl";
        case Group::Sym: return "sym";
        case Group::SymSL: return "sym-sl";
        case Group::Skew: return "sk";
        case Group::SkewGL: return "sk-gl";
    }
    return "gl";
}

Group parse_group(const std::string& s) {
    if (s == "gl") return Group::GL;
    if (s == "sl") return Group::SL;
    if (s == "sym") return Group::Sym;
    if (s == "sym-sl") return Group::SymSL;
    if (s == "sk") return Group::Skew;
    if (s == "sk-gl") return Group::SkewGL;
    throw std::invalid_argument("unknown group '" + s + "'");
}

int packed_rank(Kind kind, int m, int n) {
    switch (kind) {
        case Kind::General: return m * n;
        case Kind::Symmetric: return m * (m + 1) / 2;
        case Kind::Skew: return m * (m - 1) / 2;
    }
    return 0;
}

ModuleElement pack(const PolyMatrix& a, Kind kind, int nvars) {
    ModuleElement v;
    int m = static_cast<int>(a.size());
    int n = m ? static_cast<int>(a[0].size()) : 0;
    auto put = [&](const Poly& f) { v.push_back(f.is_zero() ? Poly(nvars) : f); };
    for (int i = 0; i < m; ++i) {
        int start = kind == Kind::General ? 0 : (kind == Kind::Symmetric ? i : i + 1);
        for (int j = start; j < n; ++j) put(a[i][j]);
    }
    return v;
}

PolyMatrix unpack(const ModuleElement& v, Kind kind, int m, int n, int nvars) {
    PolyMatrix a(m, std::vector<Poly>(n, Poly(nvars)));
    std::size_t k = 0;
    for (int i = 0; i < m; ++i) {
        int start = kind == Kind::General ? 0 : (kind == Kind::Symmetric ? i : i + 1);
        for (int j = start; j < n; ++j) {
            a[i][j] = v[k++];
            if (kind == Kind::Symmetric) a[j][i] = a[i][j];
            if (kind == Kind::Skew) a[j][i] = -a[i][j];
        }
    }
    return a;
}

namespace {

using Sparse = std::vector<std::tuple<int, int, int>>;  // (row, col, coefficient)

std::vector<Sparse> lie_basis(int m, bool trace_free) {
    std::vector<Sparse> out;
    for (int k = 0; k < m; ++k)
        for (int l = 0; l < m; ++l) {
            if (k == l && trace_free) continue;
            out.push_back({{k, l, 1}});
        }
    if (trace_free)
        for (int k = 0; k + 1 < m; ++k) out.push_back({{k, k, 1}, {k + 1, k + 1, -1}});
    return out;
}

PolyMatrix zero_matrix(int m, int n, int nv) { return PolyMatrix(m, std::vector<Poly>(n, Poly(nv))); }

// M * A for sparse M
PolyMatrix left_mul(const Sparse& mat, const PolyMatrix& a, int nv) {
    int m = static_cast<int>(a.size()), n = static_cast<int>(a[0].size());
    PolyMatrix r = zero_matrix(m, n, nv);
    for (auto [k, l, c] : mat)
        for (int j = 0; j < n; ++j) r[k][j] += a[l][j] * Rational(c);
    return r;
}

// A * M for sparse M
PolyMatrix right_mul(const PolyMatrix& a, const Sparse& mat, int nv) {
    int m = static_cast<int>(a.size()), n = static_cast<int>(a[0].size());
    PolyMatrix r = zero_matrix(m, n, nv);
    for (auto [k, l, c] : mat)
        for (int i = 0; i < m; ++i) r[i][l] += a[i][k] * Rational(c);
    return r;
}

Sparse transpose(const Sparse& s) {
    Sparse t;
    for (auto [k, l, c] : s) t.emplace_back(l, k, c);
    return t;
}

void check_group(const MatrixGerm& a, Group g) {
    bool ok = false;
    switch (g) {
        case Group::GL:
        case Group::SL: ok = a.kind == Kind::General; break;
        case Group::Sym:
        case Group::SymSL: ok = a.kind == Kind::Symmetric; break;
        case Group::Skew:
        case Group::SkewGL: ok = a.kind == Kind::Skew; break;
    }
    if (!ok) throw std::invalid_argument("group " + group_name(g) + " does not act on " + kind_name(a.kind) + " matrices");
}

std::vector<ModuleElement> partial_generators(const MatrixGerm& a) {
    std::vector<ModuleElement> out;
    int nv = a.nvars();
    for (int i = 0; i < nv; ++i) {
        PolyMatrix d = zero_matrix(a.rows(), a.cols(), nv);
        for (int r = 0; r < a.rows(); ++r)
            for (int c = 0; c < a.cols(); ++c) d[r][c] = partial(a.at(r, c), i);
        out.push_back(pack(d, a.kind, nv));
    }
    return out;
}

std::vector<ModuleElement> group_generators(const MatrixGerm& a, Group g) {
    std::vector<ModuleElement> out;
    int nv = a.nvars();
    if (g == Group::GL || g == Group::SL) {
        bool tf = g == Group::SL;
        for (const auto& mm : lie_basis(a.rows(), tf)) out.push_back(pack(left_mul(mm, a.entries, nv), a.kind, nv));
        for (const auto& mm : lie_basis(a.cols(), tf)) out.push_back(pack(right_mul(a.entries, mm, nv), a.kind, nv));
    } else {
        bool tf = g == Group::SymSL || g == Group::Skew;
        for (const auto& mm : lie_basis(a.rows(), tf)) {
            PolyMatrix l = left_mul(mm, a.entries, nv);
            PolyMatrix r = right_mul(a.entries, transpose(mm), nv);
            for (int i = 0; i < a.rows(); ++i)
                for (int j = 0; j < a.cols(); ++j) l[i][j] += r[i][j];
            out.push_back(pack(l, a.kind, nv));
        }
    }
    return out;
}

MatrixGerm prepared(const MatrixGerm& a, const TauOptions& opt, int& steps) {
    steps = 0;
    if (!a.has_unit_entry()) return a;
    if (opt.strict_units) throw std::invalid_argument("matrix has a unit entry (strict mode)");
    UnitReduction r = reduce_units(a);
    steps = r.steps;
    return r.reduced;
}

}  // namespace

std::vector<ModuleElement> tangent_generators(const MatrixGerm& a, Group g) {
    check_group(a, g);
    std::vector<ModuleElement> out = partial_generators(a);
    for (auto& v : group_generators(a, g)) out.push_back(std::move(v));
    return out;
}

TauResult tau(const MatrixGerm& a, Group g, const TauOptions& opt) {
    check_group(a, g);
    TauResult tr;
    tr.matrix = prepared(a, opt, tr.unit_reductions);
    const MatrixGerm& b = tr.matrix;
    int rank = packed_rank(b.kind, b.rows(), b.cols());
    tr.result = colength(tangent_generators(b, g), rank, b.nvars(), opt.colength);
    return tr;
}

TauResult tau_icis(const MatrixGerm& a, const TauOptions& opt) {
    if (a.kind != Kind::General) throw std::invalid_argument("tau_icis needs a general matrix");
    MatrixGerm b = a;
    if (b.cols() == 1 && b.rows() > 1) b = b.transposed();
    if (b.cols() == b.rows() - 1) b = b.transposed();
    if (b.rows() != 1 && b.cols() != b.rows() + 1)
        throw std::invalid_argument("tau_icis needs a row of equations or an m x (m+1) matrix");
    return tau(b, Group::GL, opt);
}

DeterminacyResult determinacy_bound(const MatrixGerm& a, Group g, const TauOptions& opt) {
    check_group(a, g);
    int steps = 0;
    MatrixGerm b = prepared(a, opt, steps);
    int nv = b.nvars();
    int rank = packed_rank(b.kind, b.rows(), b.cols());
    std::vector<Monomial> quad;
    for (int i = 0; i < nv; ++i)
        for (int j = i; j < nv; ++j) {
            Monomial m(nv);
            m.e[i]++;
            m.e[j]++;
            quad.push_back(m);
        }
    std::vector<ModuleElement> gens;
    for (const auto& v : partial_generators(b))
        for (const auto& q : quad) {
            ModuleElement w;
            for (const auto& f : v) w.push_back(f.mul_monomial(q));
            gens.push_back(std::move(w));
        }
    for (const auto& v : group_generators(b, g))
        for (int i = 0; i < nv; ++i) {
            ModuleElement w;
            Monomial xi = Monomial::var(nv, i);
            for (const auto& f : v) w.push_back(f.mul_monomial(xi));
            gens.push_back(std::move(w));
        }
    ColengthResult r = colength(gens, rank, nv, opt.colength);
    DeterminacyResult d;
    d.certified = r.certified;
    d.certified_at = r.certified_at;
    if (r.certified) d.k = r.certified_at - 2;
    return d;
}

UnfoldingBasis miniversal_unfolding(const MatrixGerm& a, Group g, const TauOptions& opt) {
    TauResult t = tau(a, g, opt);
    UnfoldingBasis u;
    u.tau = t.result.dim;
    u.certified = t.result.certified;
    u.certified_at = t.result.certified_at;
    const MatrixGerm& b = t.matrix;
    int nv = b.nvars();
    int rank = packed_rank(b.kind, b.rows(), b.cols());
    for (const auto& c : t.result.cobasis)
        u.basis.push_back(unpack(unit_element(nv, rank, c.component, c.monomial), b.kind, b.rows(), b.cols(), nv));
    return u;
}

int corank_differential(const MatrixGerm& a) {
    int nv = a.nvars();
    ModuleElement v = pack(a.entries, a.kind, nv);
    QMatrix lin(v.size(), QVector(nv, Rational(0)));
    for (std::size_t k = 0; k < v.size(); ++k)
        for (int i = 0; i < nv; ++i) lin[k][i] = v[k].coeff(Monomial::var(nv, i));
    return static_cast<int>(v.size()) - rank(lin, nv);
}

}  // namespace germlab
