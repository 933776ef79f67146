#include "germlab/tjurina.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "germlab/tangent.hpp"

namespace germlab {

namespace {

std::string fresh_name(const VariableSet& vars, std::string base) {
    while (vars.index_of(base) >= 0) base += "_";
    return base;
}

std::vector<Poly> identity_images(int nv) {
    std::vector<Poly> im;
    for (int i = 0; i < nv; ++i) im.push_back(Poly::var(nv, i));
    return im;
}

}  // namespace

std::vector<ChartGerm> tjurina_charts(const MatrixGerm& a) {
    if (a.kind != Kind::General) throw std::invalid_argument("Tjurina transform needs a general matrix");
    int m = a.rows(), n = a.cols();
    if (m > n) throw std::invalid_argument("Tjurina transform needs m <= n (maximal minors of a wide matrix)");
    int p = a.nvars();
    std::vector<std::string> params;
    VariableSet vars = a.vars;
    for (int k = 1; k < m; ++k) {
        std::string name = fresh_name(vars, m == 2 ? "t" : "t" + std::to_string(k));
        vars = vars.extended({name});
        params.push_back(name);
    }
    int nv = vars.size();
    std::vector<int> embed_map(p);
    std::iota(embed_map.begin(), embed_map.end(), 0);
    std::vector<ChartGerm> charts;
    for (int i = 0; i < m; ++i) {
        ChartGerm c;
        c.chart = i;
        c.vars = vars;
        // u_i = 1, the other coordinates are the chart parameters in order
        std::vector<Poly> u;
        for (int r = 0, k = 0; r < m; ++r)
            u.push_back(r == i ? Poly::constant(nv, Rational(1)) : Poly::var(nv, p + k++));
        for (int col = 0; col < n; ++col) {
            Poly e(nv);
            for (int r = 0; r < m; ++r) e += u[r] * a.at(r, col).embed(nv, embed_map);
            c.equations.push_back(std::move(e));
        }
        charts.push_back(std::move(c));
    }
    return charts;
}

ChartGerm eliminate_units(const ChartGerm& c, int N) {
    if (N < 1) throw std::invalid_argument("jet order must be positive");
    ChartGerm r = c;
    r.jet_order = N;
    int nv = r.vars.size();
    int bound = N + 1;
    for (auto& e : r.equations) e = jet(e, N);
    for (auto& el : r.eliminated) el.second = jet(el.second, N);
    for (;;) {
        int eq = -1, var = -1;
        for (std::size_t k = 0; k < r.equations.size() && eq < 0; ++k) {
            const Poly& g = r.equations[k];
            if (!g.constant_term().is_zero()) continue;
            for (int v = 0; v < nv; ++v)
                if (!g.coeff(Monomial::var(nv, v)).is_zero()) {
                    eq = static_cast<int>(k);
                    var = v;
                    break;
                }
        }
        if (eq < 0) break;
        const Poly g = r.equations[eq];
        Rational a = g.coeff(Monomial::var(nv, var));
        Poly rest = g - Poly::monomial(Monomial::var(nv, var), a);
        Rational scale = -a.inverse();
        // fixed point of y = -(rest(y))/a; each pass fixes one more degree
        Poly phi(nv);
        std::vector<Poly> images = identity_images(nv);
        bool stable = false;
        for (int it = 0; it <= N + 2; ++it) {
            images[var] = phi;
            Poly next = rest.substitute_trunc(images, bound) * scale;
            if (next == phi) {
                stable = true;
                break;
            }
            phi = std::move(next);
        }
        if (!stable) throw std::runtime_error("elimination of " + r.vars.name(var) + " did not stabilize");
        images[var] = phi;
        r.equations.erase(r.equations.begin() + eq);
        std::vector<Poly> kept;
        for (auto& e : r.equations) {
            Poly s = e.substitute_trunc(images, bound);
            if (!s.is_zero()) kept.push_back(std::move(s));
        }
        r.equations = std::move(kept);
        for (auto& el : r.eliminated) el.second = el.second.substitute_trunc(images, bound);
        r.eliminated.emplace_back(r.vars.name(var), phi);
    }
    return r;
}

ResidualGerm residual(const ChartGerm& c) {
    int nv = c.vars.size();
    std::vector<bool> gone(nv, false);
    for (const auto& el : c.eliminated) gone[c.vars.index_of(el.first)] = true;
    std::vector<std::string> names;
    std::vector<int> map(nv, -1);
    for (int i = 0; i < nv; ++i)
        if (!gone[i]) {
            map[i] = static_cast<int>(names.size());
            names.push_back(c.vars.name(i));
        }
    if (names.empty()) names.push_back(fresh_name(c.vars, "o"));
    ResidualGerm r;
    r.vars = VariableSet(names);
    int rv = std::max<int>(1, static_cast<int>(names.size()));
    for (const auto& e : c.equations) {
        std::vector<Poly::Term> terms;
        for (const auto& [m, coef] : e.terms()) {
            Monomial mm(rv);
            for (int i = 0; i < nv; ++i) {
                if (!m.e[i]) continue;
                if (map[i] < 0) throw std::logic_error("residual equation uses an eliminated variable");
                mm.e[map[i]] = m.e[i];
            }
            terms.emplace_back(mm, coef);
        }
        r.equations.push_back(Poly::from_terms(rv, std::move(terms)));
    }
    return r;
}

bool elimination_consistent(const ChartGerm& original, const ChartGerm& reduced) {
    int nv = original.vars.size();
    int bound = reduced.jet_order + 1;
    std::vector<Poly> images = identity_images(nv);
    for (const auto& [name, phi] : reduced.eliminated) images[original.vars.index_of(name)] = phi;
    std::vector<bool> hit(reduced.equations.size(), false);
    for (const auto& e : original.equations) {
        Poly s = jet(e, reduced.jet_order).substitute_trunc(images, bound);
        if (s.is_zero()) continue;
        bool found = false;
        for (std::size_t k = 0; k < reduced.equations.size(); ++k)
            if (reduced.equations[k] == s) {
                hit[k] = true;
                found = true;
            }
        if (!found) return false;
    }
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

namespace {

std::vector<Rational> as_univariate(const Poly& f) {
    std::vector<Rational> c;
    for (const auto& [m, coef] : f.terms()) {
        int d = m.e[0];
        if (static_cast<int>(c.size()) <= d) c.resize(d + 1, Rational(0));
        c[d] = coef;
    }
    return c;
}

// Singular points of the exceptional fiber in this chart: the parameter values
// where the x-linear part of the chart equations drops rank. Only the
// single-parameter case (two-row matrices) is handled.
bool off_origin_singularities(const MatrixGerm& a, const ChartGerm& chart, bool& checked) {
    checked = false;
    if (a.rows() != 2) return false;
    checked = true;
    int p = a.nvars(), n = a.cols();
    int nv = chart.vars.size();
    if (n > p) return true;
    // L(t): n x p matrix of polynomials in the single parameter
    PolyMatrix lin(n, std::vector<Poly>(p, Poly(1)));
    for (int c = 0; c < n; ++c)
        for (const auto& [m, coef] : chart.equations[c].terms()) {
            int xdeg = 0, xvar = -1;
            for (int i = 0; i < p; ++i)
                if (m.e[i]) {
                    xdeg += m.e[i];
                    xvar = i;
                }
            if (xdeg != 1) continue;
            lin[c][xvar] += Poly::monomial(Monomial::var(1, 0, m.e[nv - 1]), coef);
        }
    std::vector<Rational> g;
    for (const auto& cols : subsets(p, n)) {
        PolyMatrix sub(n, std::vector<Poly>(n));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) sub[i][j] = lin[i][cols[j]];
        g = univariate_gcd(g, as_univariate(determinant(sub)));
    }
    if (g.empty()) return true;  // the whole fiber is singular
    for (std::size_t i = 0; i + 1 < g.size(); ++i)
        if (!g[i].is_zero()) return true;
    return false;
}

void fill_invariants(ChartInvariants& ci, const ColengthOptions& opt) {
    const ResidualGerm& res = ci.residual;
    ci.mu = ColengthResult{};
    ci.tau.reset();
    ci.label.reset();
    if (res.equations.empty()) {
        ci.smooth = true;
        ci.mu.certified = true;
        ci.mu.certified_at = 1;
        return;
    }
    ci.smooth = false;
    if (res.equations.size() == 1) {
        const Poly& f = res.equations[0];
        ci.mu = milnor(f, opt);
        ci.tau = tjurina_number(f, opt);
        ci.label = ade_recognize(f, opt);
        return;
    }
    IcisMilnor im = milnor_icis(res.equations, opt);
    ci.mu.dim = im.mu;
    ci.mu.certified = im.certified;
    ci.mu.certified_at = im.orders.empty() ? 0 : *std::max_element(im.orders.begin(), im.orders.end());
    PolyMatrix row(1, res.equations);
    TauOptions to;
    to.colength = opt;
    ci.tau = tau_icis(MatrixGerm(res.vars, Kind::General, row), to).result;
}

}  // namespace

ChartInvariants chart_invariants(const MatrixGerm& a, const ChartGerm& chart, const ColengthOptions& opt) {
    ChartInvariants ci;
    for (const auto& e : chart.equations)
        if (!e.constant_term().is_zero()) {
            ci.off_transform = true;
            ci.smooth = true;
            ci.reduced = chart;
            return ci;
        }
    int N = 16;
    for (int pass = 0; pass < 2; ++pass) {
        ci.reduced = eliminate_units(chart, N);
        if (!elimination_consistent(chart, ci.reduced))
            throw std::logic_error("substituting the eliminated jets does not reproduce the chart equations");
        ci.residual = residual(ci.reduced);
        fill_invariants(ci, opt);
        if (ci.smooth || !ci.mu.certified || ci.mu.certified_at + 2 <= N) break;
        N = ci.mu.certified_at + 2;
    }
    ci.caveat = off_origin_singularities(a, chart, ci.caveat_checked);
    return ci;
}

B3Result b3_threefold(const MatrixGerm& a, const ColengthOptions& opt) {
    if (a.kind != Kind::General || a.rows() != 2 || a.cols() != 3 || a.nvars() != 5)
        throw std::invalid_argument("b3 needs a general 2 x 3 matrix in 5 variables");
    B3Result r;
    r.certified = true;
    for (const auto& c : tjurina_charts(a)) {
        ChartInvariants ci = chart_invariants(a, c, opt);
        if (!ci.certified()) r.certified = false;
        if (ci.caveat) r.caveat = true;
        if (!ci.smooth) r.b3 += ci.mu.dim;
        r.charts.push_back(std::move(ci));
    }
    if (r.caveat) r.certified = false;
    return r;
}

}  // namespace germlab
