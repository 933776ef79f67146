#include "germlab/detideal.hpp"

#include <stdexcept>

namespace germlab {

std::string kind_name(Kind k) {
    switch (k) {
        case Kind::General: return "general";
        case Kind::Symmetric: return "symmetric";
        case Kind::Skew: return "skew";
    }
    return "general";
}

Kind parse_kind(const std::string& s) {
    if (s == "general") return Kind::General;
    if (s == "symmetric") return Kind::Symmetric;
    if (s == "skew") return Kind::Skew;
    throw std::invalid_argument("unknown matrix kind '" + s + "'");
}

MatrixGerm::MatrixGerm(VariableSet v, Kind k, PolyMatrix e) : vars(std::move(v)), kind(k), entries(std::move(e)) {
    for (auto& row : entries)
        for (auto& f : row)
            if (f.is_zero()) f = Poly(vars.size());
    validate();
}

void MatrixGerm::validate() const {
    if (entries.empty() || entries[0].empty()) throw std::invalid_argument("empty matrix");
    std::size_t n = entries[0].size();
    for (const auto& row : entries) {
        if (row.size() != n) throw std::invalid_argument("matrix rows have different lengths");
        for (const auto& f : row)
            if (!f.is_zero() && f.nvars() != vars.size())
                throw std::invalid_argument("matrix entry over a different variable set");
    }
    if (kind == Kind::General) return;
    int m = rows();
    if (m != cols()) throw std::invalid_argument(kind_name(kind) + " matrix must be square");
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            if (kind == Kind::Symmetric && entries[i][j] != entries[j][i])
                throw std::invalid_argument("matrix declared symmetric is not symmetric at (" + std::to_string(i + 1) +
                                            "," + std::to_string(j + 1) + ")");
            if (kind == Kind::Skew && entries[i][j] != -entries[j][i])
                throw std::invalid_argument("matrix declared skew is not skew-symmetric at (" +
                                            std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
}

bool MatrixGerm::has_unit_entry() const {
    for (const auto& row : entries)
        for (const auto& f : row)
            if (!f.constant_term().is_zero()) return true;
    return false;
}

MatrixGerm MatrixGerm::transposed() const {
    PolyMatrix t(cols(), std::vector<Poly>(rows()));
    for (int i = 0; i < rows(); ++i)
        for (int j = 0; j < cols(); ++j) t[j][i] = entries[i][j];
    MatrixGerm g;
    g.vars = vars;
    g.kind = kind;
    g.entries = std::move(t);
    return g;
}

std::vector<MultiIndex> subsets(int n, int k) {
    std::vector<MultiIndex> out;
    if (k < 0 || k > n) return out;
    MultiIndex cur(k);
    for (int i = 0; i < k; ++i) cur[i] = i;
    for (;;) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i) --i;
        if (i < 0) break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j) cur[j] = cur[j - 1] + 1;
    }
    return out;
}

namespace {

int ring_of(const PolyMatrix& a) {
    int nv = 0;
    for (const auto& row : a)
        for (const auto& f : row) nv = std::max(nv, f.nvars());
    return nv;
}

Poly det_rec(const PolyMatrix& a, const MultiIndex& rows, std::vector<char>& used, int depth, int nv) {
    int t = static_cast<int>(rows.size());
    if (depth == t) return Poly::constant(nv, Rational(1));
    Poly acc(nv);
    int sign = 1;
    for (int c = 0; c < static_cast<int>(used.size()); ++c) {
        if (used[c]) continue;
        const Poly& e = a[rows[depth]][c];
        if (!e.is_zero()) {
            used[c] = 1;
            Poly sub = det_rec(a, rows, used, depth + 1, nv);
            used[c] = 0;
            if (!sub.is_zero()) {
                Poly prod = e * sub;
                if (sign > 0)
                    acc += prod;
                else
                    acc -= prod;
            }
        }
        sign = -sign;
    }
    return acc;
}

PolyMatrix submatrix(const PolyMatrix& a, const MultiIndex& r, const MultiIndex& c) {
    PolyMatrix s(r.size(), std::vector<Poly>(c.size()));
    for (std::size_t i = 0; i < r.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) s[i][j] = a[r[i]][c[j]];
    return s;
}

Poly pf_rec(const PolyMatrix& a, std::vector<int>& idx, int nv) {
    if (idx.empty()) return Poly::constant(nv, Rational(1));
    int first = idx[0];
    Poly acc(nv);
    for (std::size_t j = 1; j < idx.size(); ++j) {
        const Poly& e = a[first][idx[j]];
        if (e.is_zero()) continue;
        std::vector<int> rest;
        for (std::size_t k = 1; k < idx.size(); ++k)
            if (k != j) rest.push_back(idx[k]);
        Poly sub = pf_rec(a, rest, nv);
        if (sub.is_zero()) continue;
        Poly prod = e * sub;
        // sign (-1)^(j+1) with j counted from 1 for the partner position
        if (j % 2 == 1)
            acc += prod;
        else
            acc -= prod;
    }
    return acc;
}

}  // namespace

Poly determinant(const PolyMatrix& a) {
    int n = static_cast<int>(a.size());
    for (const auto& row : a)
        if (static_cast<int>(row.size()) != n) throw std::invalid_argument("determinant of a non-square matrix");
    int nv = std::max(1, ring_of(a));
    MultiIndex rows(n);
    for (int i = 0; i < n; ++i) rows[i] = i;
    std::vector<char> used(n, 0);
    return det_rec(a, rows, used, 0, nv);
}

Poly pfaffian(const PolyMatrix& a) {
    int n = static_cast<int>(a.size());
    if (n % 2) return Poly(std::max(1, ring_of(a)));
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    return pf_rec(a, idx, std::max(1, ring_of(a)));
}

std::vector<Minor> minors(const MatrixGerm& a, int t) {
    if (t < 1 || t > std::min(a.rows(), a.cols())) throw std::invalid_argument("minor size out of range");
    std::vector<Minor> out;
    for (const auto& r : subsets(a.rows(), t))
        for (const auto& c : subsets(a.cols(), t)) {
            Poly v = determinant(submatrix(a.entries, r, c));
            if (v.is_zero()) v = Poly(a.nvars());
            out.push_back({r, c, std::move(v)});
        }
    return out;
}

std::vector<PfaffianEntry> pfaffians(const MatrixGerm& a, int s) {
    if (a.kind != Kind::Skew) throw std::invalid_argument("pfaffians need a skew matrix");
    if (s < 1 || 2 * s > a.rows()) throw std::invalid_argument("pfaffian size out of range");
    std::vector<PfaffianEntry> out;
    for (const auto& idx : subsets(a.rows(), 2 * s)) {
        Poly v = pfaffian(submatrix(a.entries, idx, idx));
        if (v.is_zero()) v = Poly(a.nvars());
        out.push_back({idx, std::move(v)});
    }
    return out;
}

std::vector<Poly> minor_values(const MatrixGerm& a, int t) {
    std::vector<Poly> v;
    for (auto& m : minors(a, t)) v.push_back(std::move(m.value));
    return v;
}

std::vector<Poly> pfaffian_values(const MatrixGerm& a, int s) {
    std::vector<Poly> v;
    for (auto& p : pfaffians(a, s)) v.push_back(std::move(p.value));
    return v;
}

int expected_codim(Kind kind, int m, int n, int t) {
    switch (kind) {
        case Kind::General:
            if (t < 1 || t > std::min(m, n)) throw std::invalid_argument("expected_codim: t out of range");
            return (m - t + 1) * (n - t + 1);
        case Kind::Symmetric:
            if (m != n || t < 1 || t > n) throw std::invalid_argument("expected_codim: bad symmetric sizes");
            return (n - t + 2) * (n - t + 1) / 2;
        case Kind::Skew:
            if (m != n || t < 1 || 2 * t > m) throw std::invalid_argument("expected_codim: bad skew sizes");
            return (m - 2 * t + 2) * (m - 2 * t + 1) / 2;
    }
    return 0;
}

std::vector<Poly> hilbert_burch_vector(const MatrixGerm& a) {
    if (a.kind != Kind::General) throw std::invalid_argument("hilbert_burch_vector needs a general matrix");
    MatrixGerm g = a;
    if (a.cols() == a.rows() - 1) g = a.transposed();
    int m = g.rows();
    if (g.cols() != m + 1) throw std::invalid_argument("hilbert_burch_vector needs an m x (m+1) matrix");
    std::vector<Poly> f;
    MultiIndex rows(m);
    for (int i = 0; i < m; ++i) rows[i] = i;
    for (int i = 0; i <= m; ++i) {
        MultiIndex cols;
        for (int j = 0; j <= m; ++j)
            if (j != i) cols.push_back(j);
        Poly d = determinant(submatrix(g.entries, rows, cols));
        if (d.is_zero()) d = Poly(a.nvars());
        f.push_back(i % 2 ? -d : d);
    }
    return f;
}

std::vector<Poly> buchsbaum_eisenbud_vector(const MatrixGerm& a) {
    if (a.kind != Kind::Skew) throw std::invalid_argument("buchsbaum_eisenbud_vector needs a skew matrix");
    int n = a.rows();
    if (n % 2 == 0) throw std::invalid_argument("buchsbaum_eisenbud_vector needs odd size");
    std::vector<Poly> f;
    for (int i = 0; i < n; ++i) {
        MultiIndex idx;
        for (int j = 0; j < n; ++j)
            if (j != i) idx.push_back(j);
        Poly p = n == 1 ? Poly::constant(a.nvars(), Rational(1)) : pfaffian(submatrix(a.entries, idx, idx));
        if (p.is_zero()) p = Poly(a.nvars());
        f.push_back(i % 2 ? -p : p);
    }
    return f;
}

namespace {

MatrixGerm shrink_general(const MatrixGerm& a, int i, int j) {
    PolyMatrix b;
    const Poly& u = a.at(i, j);
    for (int k = 0; k < a.rows(); ++k) {
        if (k == i) continue;
        std::vector<Poly> row;
        for (int l = 0; l < a.cols(); ++l) {
            if (l == j) continue;
            row.push_back(u * a.at(k, l) - a.at(k, j) * a.at(i, l));
        }
        b.push_back(std::move(row));
    }
    return MatrixGerm(a.vars, a.kind, std::move(b));
}

MatrixGerm shrink_pair(const MatrixGerm& a, int i, int j) {
    PolyMatrix b;
    std::vector<int> keep;
    for (int k = 0; k < a.rows(); ++k)
        if (k != i && k != j) keep.push_back(k);
    if (a.kind == Kind::Skew) {
        for (int k : keep) {
            std::vector<Poly> row;
            for (int l : keep)
                row.push_back(a.at(i, j) * a.at(k, l) - a.at(i, k) * a.at(j, l) + a.at(i, l) * a.at(j, k));
            b.push_back(std::move(row));
        }
    } else {
        const Poly &aii = a.at(i, i), &aij = a.at(i, j), &ajj = a.at(j, j);
        Poly det = aii * ajj - aij * aij;
        for (int k : keep) {
            std::vector<Poly> row;
            for (int l : keep) {
                Poly adj = a.at(k, i) * ajj * a.at(l, i) - a.at(k, i) * aij * a.at(l, j) -
                           a.at(k, j) * aij * a.at(l, i) + a.at(k, j) * aii * a.at(l, j);
                row.push_back(det * a.at(k, l) - adj);
            }
            b.push_back(std::move(row));
        }
    }
    return MatrixGerm(a.vars, a.kind, std::move(b));
}

}  // namespace

UnitReduction reduce_units(const MatrixGerm& a) {
    UnitReduction r{a, 0};
    for (;;) {
        const MatrixGerm& g = r.reduced;
        int ui = -1, uj = -1;
        for (int i = 0; i < g.rows() && ui < 0; ++i)
            for (int j = 0; j < g.cols(); ++j)
                if (!g.at(i, j).constant_term().is_zero()) {
                    ui = i;
                    uj = j;
                    break;
                }
        if (ui < 0) return r;
        if (g.kind == Kind::General) {
            if (g.rows() == 1 || g.cols() == 1) throw std::invalid_argument("matrix with a unit entry has no determinantal locus");
            r.reduced = shrink_general(g, ui, uj);
        } else if (g.kind == Kind::Symmetric) {
            int di = -1;
            for (int i = 0; i < g.rows(); ++i)
                if (!g.at(i, i).constant_term().is_zero()) {
                    di = i;
                    break;
                }
            if (g.rows() == 1) throw std::invalid_argument("matrix with a unit entry has no determinantal locus");
            if (di >= 0)
                r.reduced = shrink_general(g, di, di);
            else {
                if (g.rows() == 2) throw std::invalid_argument("matrix with a unit entry has no determinantal locus");
                r.reduced = shrink_pair(g, std::min(ui, uj), std::max(ui, uj));
            }
        } else {
            if (g.rows() <= 2) throw std::invalid_argument("matrix with a unit entry has no determinantal locus");
            r.reduced = shrink_pair(g, std::min(ui, uj), std::max(ui, uj));
        }
        r.steps++;
    }
}

}  // namespace germlab
