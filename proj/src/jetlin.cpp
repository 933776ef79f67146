#include "germlab/jetlin.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "germlab/linalg.hpp"

namespace germlab {

ModuleElement unit_element(int nvars, int rank, int component, const Monomial& m) {
    ModuleElement v(rank, Poly(nvars));
    v[component] = Poly::monomial(m);
    return v;
}

int element_order(const ModuleElement& v) {
    int o = -1;
    for (const auto& f : v) {
        int k = f.order();
        if (k >= 0 && (o < 0 || k < o)) o = k;
    }
    return o;
}

// ---------------------------------------------------------------- IndexSpace

IndexSpace::IndexSpace(int nvars, int rank, int bound) : p_(nvars), r_(rank), h_(bound) {
    if (nvars < 1 || nvars > kMaxVars) throw std::invalid_argument("index space: bad variable count");
    if (rank < 1 || rank > 255) throw std::invalid_argument("index space: bad rank");
    if (bound < 1) throw std::invalid_argument("index space: bound must be positive");
    int top = bound + nvars + 1;
    binom_.assign(top + 1, std::vector<long long>(nvars + 2, 0));
    for (int n = 0; n <= top; ++n) {
        binom_[n][0] = 1;
        for (int k = 1; k <= std::min(n, nvars + 1); ++k)
            binom_[n][k] = binom_[n - 1][k - 1] + (k <= n - 1 ? binom_[n - 1][k] : 0);
    }
    mono_count_.resize(bound + 1);
    mono_start_.resize(bound + 2);
    deg_start_.resize(bound + 2);
    int64_t mstart = 0, istart = 0;
    for (int d = 0; d <= bound; ++d) {
        long long c = binom_[d + nvars - 1][nvars - 1];
        mono_count_[d] = static_cast<int32_t>(c);
        mono_start_[d] = static_cast<int32_t>(mstart);
        deg_start_[d] = static_cast<int32_t>(istart);
        if (d < bound) {
            mstart += c;
            istart += c * rank;
            if (istart > INT32_MAX / 2) throw std::length_error("index space too large");
        }
    }
    mono_start_[bound + 1] = static_cast<int32_t>(mstart);
    deg_start_[bound + 1] = static_cast<int32_t>(istart);
    total_ = static_cast<int32_t>(istart);

    mono_.reserve(mstart);
    Monomial cur(nvars);
    std::function<void(int, int)> gen = [&](int var, int left) {
        if (var == nvars - 1) {
            cur.e[var] = static_cast<uint16_t>(left);
            mono_.push_back(cur);
            return;
        }
        for (int a = left; a >= 0; --a) {
            cur.e[var] = static_cast<uint16_t>(a);
            gen(var + 1, left - a);
        }
        cur.e[var] = 0;
    };
    for (int d = 0; d < bound; ++d) gen(0, d);

    mono_shift_.assign(mono_.size() * nvars, -1);
    for (std::size_t id = 0; id < mono_.size(); ++id) {
        int d = mono_[id].degree();
        if (d + 1 >= bound) continue;
        for (int v = 0; v < nvars; ++v) {
            Monomial m = mono_[id];
            m.e[v]++;
            mono_shift_[id * nvars + v] = mono_start_[d + 1] + mono_rank(m);
        }
    }

    comp_.resize(total_);
    deg_.resize(total_);
    mono_id_.resize(total_);
    for (int d = 0; d < bound; ++d) {
        int32_t base = deg_start_[d];
        for (int c = 0; c < rank; ++c)
            for (int32_t k = 0; k < mono_count_[d]; ++k) {
                int32_t i = base + c * mono_count_[d] + k;
                comp_[i] = static_cast<uint8_t>(c);
                deg_[i] = static_cast<uint16_t>(d);
                mono_id_[i] = mono_start_[d] + k;
            }
    }
}

int32_t IndexSpace::mono_rank(const Monomial& m) const {
    // Count monomials of the same degree that precede m: those with a larger
    // exponent at the first differing variable.
    int left = m.degree();
    long long r = 0;
    for (int i = 0; i + 1 < p_; ++i) {
        int k = p_ - i - 1;
        int gap = left - m.e[i];
        if (gap > 0) r += binom_[gap - 1 + k][k];
        left -= m.e[i];
    }
    return static_cast<int32_t>(r);
}

int32_t IndexSpace::index(int component, const Monomial& m) const {
    int d = m.degree();
    if (d >= h_) return -1;
    return deg_start_[d] + component * mono_count_[d] + mono_rank(m);
}

int32_t IndexSpace::shift(int32_t idx, int var) const {
    int d = deg_[idx];
    if (d + 1 >= h_) return -1;
    int32_t nm = mono_shift_[static_cast<std::size_t>(mono_id_[idx]) * p_ + var];
    return deg_start_[d + 1] + comp_[idx] * mono_count_[d + 1] + (nm - mono_start_[d + 1]);
}

SparseRow to_row(const ModuleElement& v, const IndexSpace& sp) {
    if (static_cast<int>(v.size()) != sp.rank()) throw std::invalid_argument("module element rank mismatch");
    std::vector<std::pair<int32_t, Rational>> tmp;
    for (int c = 0; c < sp.rank(); ++c) {
        if (!v[c].is_zero() && v[c].nvars() != sp.nvars())
            throw std::invalid_argument("module element over a different variable set");
        for (const auto& [m, q] : v[c].terms()) {
            if (m.degree() >= sp.bound()) break;
            tmp.emplace_back(sp.index(c, m), q);
        }
    }
    std::sort(tmp.begin(), tmp.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    SparseRow row;
    row.idx.reserve(tmp.size());
    row.val.reserve(tmp.size());
    for (auto& [i, q] : tmp) {
        row.idx.push_back(i);
        row.val.push_back(std::move(q));
    }
    return row;
}

ModuleElement from_row(const SparseRow& row, const IndexSpace& sp) {
    std::vector<std::vector<Poly::Term>> parts(sp.rank());
    for (std::size_t k = 0; k < row.idx.size(); ++k)
        parts[sp.component(row.idx[k])].emplace_back(sp.monomial(row.idx[k]), row.val[k]);
    ModuleElement v;
    for (auto& t : parts) v.push_back(Poly::from_terms(sp.nvars(), std::move(t)));
    return v;
}

// ------------------------------------------------------------------ Echelon

Echelon::Echelon(const IndexSpace& sp) : sp_(&sp), pivot_of_(sp.size(), -1), acc_(sp.size()), live_(sp.size(), 0) {}

void Echelon::push(int32_t i) {
    live_[i] = 1;
    heap_.push_back(i);
    std::push_heap(heap_.begin(), heap_.end(), std::greater<int32_t>());
}

int32_t Echelon::pop_min() {
    while (!heap_.empty()) {
        std::pop_heap(heap_.begin(), heap_.end(), std::greater<int32_t>());
        int32_t i = heap_.back();
        heap_.pop_back();
        live_[i] = 0;
        if (!acc_[i].is_zero()) return i;
    }
    return -1;
}

void Echelon::scatter(const SparseRow& v) {
    for (std::size_t k = 0; k < v.idx.size(); ++k) {
        int32_t i = v.idx[k];
        if (live_[i])
            acc_[i] += v.val[k];
        else {
            acc_[i] = v.val[k];
            push(i);
        }
    }
}

SparseRow Echelon::drain(int32_t first) {
    SparseRow out;
    out.idx.push_back(first);
    out.val.push_back(std::move(acc_[first]));
    acc_[first] = Rational(0);
    for (int32_t i; (i = pop_min()) >= 0;) {
        out.idx.push_back(i);
        out.val.push_back(std::move(acc_[i]));
        acc_[i] = Rational(0);
    }
    return out;
}

int32_t Echelon::insert(const SparseRow& v) {
    if (v.empty()) return -1;
    scatter(v);
    for (int32_t i; (i = pop_min()) >= 0;) {
        int32_t pr = pivot_of_[i];
        if (pr < 0) {
            SparseRow r = drain(i);
            if (!r.val[0].is_one()) {
                Rational inv = r.val[0].inverse();
                for (auto& q : r.val) q *= inv;
            }
            int32_t id = static_cast<int32_t>(rows_.size());
            pivot_of_[i] = id;
            rows_.push_back(std::move(r));
            return id;
        }
        Rational c = std::move(acc_[i]);
        acc_[i] = Rational(0);
        const SparseRow& row = rows_[pr];
        for (std::size_t k = 1; k < row.idx.size(); ++k) {
            int32_t j = row.idx[k];
            if (live_[j])
                acc_[j].submul(c, row.val[k]);
            else {
                acc_[j] = -(c * row.val[k]);
                push(j);
            }
        }
    }
    return -1;
}

SparseRow Echelon::reduce(const SparseRow& v) {
    SparseRow out;
    if (v.empty()) return out;
    scatter(v);
    for (int32_t i; (i = pop_min()) >= 0;) {
        int32_t pr = pivot_of_[i];
        Rational c = std::move(acc_[i]);
        acc_[i] = Rational(0);
        if (pr < 0) {
            out.idx.push_back(i);
            out.val.push_back(std::move(c));
            continue;
        }
        const SparseRow& row = rows_[pr];
        for (std::size_t k = 1; k < row.idx.size(); ++k) {
            int32_t j = row.idx[k];
            if (live_[j])
                acc_[j].submul(c, row.val[k]);
            else {
                acc_[j] = -(c * row.val[k]);
                push(j);
            }
        }
    }
    return out;
}

void Echelon::close_under_variables() {
    const int p = sp_->nvars();
    shifted_upto_.resize(1, 0);
    std::size_t& cursor = shifted_upto_[0];
    SparseRow w;
    while (cursor < rows_.size()) {
        std::size_t k = cursor++;
        for (int var = 0; var < p; ++var) {
            w.idx.clear();
            w.val.clear();
            const SparseRow& r = rows_[k];
            for (std::size_t t = 0; t < r.idx.size(); ++t) {
                int32_t j = sp_->shift(r.idx[t], var);
                if (j < 0) break;
                w.idx.push_back(j);
                w.val.push_back(r.val[t]);
            }
            insert(w);
        }
    }
}

void Echelon::interreduce() {
    std::vector<int32_t> order(rows_.size());
    for (std::size_t k = 0; k < rows_.size(); ++k) order[k] = static_cast<int32_t>(k);
    std::sort(order.begin(), order.end(), [&](int32_t a, int32_t b) { return rows_[a].idx[0] > rows_[b].idx[0]; });
    for (int32_t id : order) {
        SparseRow& r = rows_[id];
        if (r.idx.size() < 2) continue;
        SparseRow tail;
        tail.idx.assign(r.idx.begin() + 1, r.idx.end());
        tail.val.assign(r.val.begin() + 1, r.val.end());
        SparseRow red = reduce(tail);
        SparseRow out;
        out.idx.push_back(r.idx[0]);
        out.val.push_back(Rational(1));
        out.idx.insert(out.idx.end(), red.idx.begin(), red.idx.end());
        out.val.insert(out.val.end(), red.val.begin(), red.val.end());
        r = std::move(out);
    }
}

std::vector<int32_t> Echelon::pivots_per_degree() const {
    std::vector<int32_t> cnt(sp_->bound(), 0);
    for (const auto& r : rows_) cnt[sp_->degree(r.idx[0])]++;
    return cnt;
}

// ------------------------------------------------------------ span helpers

namespace {

int infer_nvars(const std::vector<ModuleElement>& gens, int nvars) {
    if (nvars > 0) return nvars;
    for (const auto& g : gens)
        for (const auto& f : g)
            if (f.nvars() > 0) return f.nvars();
    return 1;
}

void check_rank(const std::vector<ModuleElement>& gens, int rank) {
    for (const auto& g : gens)
        if (static_cast<int>(g.size()) != rank) throw std::invalid_argument("generator rank mismatch");
}

void fill(Echelon& e, const std::vector<ModuleElement>& gens) {
    for (const auto& g : gens) e.insert(to_row(g, e.space()));
    e.close_under_variables();
}

int64_t coordinate_count(int nvars, int rank, int bound) {
    // rank * C(bound - 1 + nvars, nvars), computed without overflow for our sizes
    long double c = 1;
    for (int k = 1; k <= nvars; ++k) c = c * (bound - 1 + k) / k;
    long double t = c * rank;
    return t > 9e18L ? INT64_MAX : static_cast<int64_t>(t + 0.5L);
}

}  // namespace

JetSpan span_build(const std::vector<ModuleElement>& gens, int rank, int N, int nvars) {
    if (N < 1) throw std::invalid_argument("span_build: order must be positive");
    check_rank(gens, rank);
    nvars = infer_nvars(gens, nvars);
    IndexSpace sp(nvars, rank, N);
    Echelon e(sp);
    fill(e, gens);
    e.interreduce();
    JetSpan s;
    s.N = N;
    s.rank = rank;
    s.nvars = nvars;
    std::vector<const SparseRow*> sorted;
    for (const auto& r : e.rows()) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(), [](const SparseRow* a, const SparseRow* b) { return a->idx[0] < b->idx[0]; });
    for (const SparseRow* r : sorted) {
        s.rows.push_back(from_row(*r, sp));
        s.pivots.emplace_back(sp.component(r->idx[0]), sp.monomial(r->idx[0]));
    }
    return s;
}

ModuleElement reduce(const ModuleElement& v, const JetSpan& span) {
    IndexSpace sp(span.nvars, span.rank, span.N);
    Echelon e(sp);
    for (const auto& r : span.rows) e.insert(to_row(r, sp));
    return from_row(e.reduce(to_row(v, sp)), sp);
}

bool span_equal(const std::vector<ModuleElement>& g1, const std::vector<ModuleElement>& g2, int rank, int N,
                int nvars) {
    check_rank(g1, rank);
    check_rank(g2, rank);
    nvars = infer_nvars(g1, infer_nvars(g2, nvars));
    IndexSpace sp(nvars, rank, N);
    Echelon a(sp), b(sp);
    fill(a, g1);
    fill(b, g2);
    if (a.rows().size() != b.rows().size()) return false;
    for (const auto& g : g2)
        if (!a.reduce(to_row(g, sp)).empty()) return false;
    return true;
}

ColengthResult colength(const std::vector<ModuleElement>& gens, int rank, int nvars, const ColengthOptions& opt) {
    if (opt.max_order < 2) throw std::invalid_argument("colength: max order must be at least 2");
    check_rank(gens, rank);
    nvars = infer_nvars(gens, nvars);
    int H = std::min(opt.max_order, 4);
    ColengthResult res;
    for (;;) {
        if (coordinate_count(nvars, rank, H) > opt.max_coordinates) break;
        IndexSpace sp(nvars, rank, H);
        Echelon e(sp);
        fill(e, gens);
        std::vector<int32_t> cnt = e.pivots_per_degree();
        int hit = -1;
        for (int d = 1; d < H; ++d)
            if (cnt[d] == sp.degree_count(d)) {
                hit = d;
                break;
            }
        int limit = hit > 0 ? hit : H;
        res.cobasis.clear();
        for (int32_t i = 0; i < sp.degree_start(limit); ++i)
            if (!e.is_pivot(i)) res.cobasis.push_back({sp.component(i), sp.monomial(i)});
        res.dim = static_cast<int>(res.cobasis.size());
        if (hit > 0) {
            res.certified = true;
            res.certified_at = hit + 1;
            return res;
        }
        res.certified = false;
        res.certified_at = H;
        if (H >= opt.max_order) break;
        H = std::min(opt.max_order, H + std::max(2, H / 4));
    }
    return res;
}

std::vector<ModuleElement> as_ideal(const std::vector<Poly>& gens) {
    std::vector<ModuleElement> out;
    out.reserve(gens.size());
    for (const auto& g : gens) out.push_back({g});
    return out;
}

ColengthResult ideal_colength(const std::vector<Poly>& gens, int nvars, const ColengthOptions& opt) {
    return colength(as_ideal(gens), 1, nvars, opt);
}

PolyMatrix matmul_trunc(const PolyMatrix& a, const PolyMatrix& b, int bound) {
    std::size_t m = a.size(), k = b.size(), n = b.empty() ? 0 : b[0].size();
    int nv = 0;
    for (const auto& row : a)
        for (const auto& f : row) nv = std::max(nv, f.nvars());
    PolyMatrix c(m, std::vector<Poly>(n, Poly(nv)));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t l = 0; l < k; ++l)
                if (!a[i][l].is_zero() && !b[l][j].is_zero()) c[i][j] += Poly::mul_trunc(a[i][l], b[l][j], bound);
    return c;
}

PolyMatrix invert_matrix_jet(const PolyMatrix& p, int N) {
    std::size_t n = p.size();
    int nv = 0;
    for (const auto& row : p) {
        if (row.size() != n) throw std::invalid_argument("invert_matrix_jet: matrix not square");
        for (const auto& f : row) nv = std::max(nv, f.nvars());
    }
    if (nv == 0) nv = 1;
    QMatrix c0(n, QVector(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c0[i][j] = p[i][j].constant_term();
    auto inv0 = inverse(c0);
    if (!inv0) throw std::domain_error("invert_matrix_jet: singular constant term");
    PolyMatrix q0(n, std::vector<Poly>(n, Poly(nv)));
    PolyMatrix rest(n, std::vector<Poly>(n, Poly(nv)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            q0[i][j] = Poly::constant(nv, (*inv0)[i][j]);
            rest[i][j] = p[i][j] - Poly::constant(nv, c0[i][j]);
        }
    // P = P0 (I + E) with E = P0^{-1}(P - P0) in m; P^{-1} = sum (-E)^k P0^{-1}
    PolyMatrix e = matmul_trunc(q0, rest, N);
    for (auto& row : e)
        for (auto& f : row) f = -f;
    PolyMatrix term = q0, sum = q0;
    for (int k = 1; k < N; ++k) {
        term = matmul_trunc(e, term, N);
        bool zero = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!term[i][j].is_zero()) zero = false;
                sum[i][j] += term[i][j];
            }
        if (zero) break;
    }
    return sum;
}

}  // namespace germlab
