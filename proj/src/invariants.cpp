#include "germlab/invariants.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "germlab/linalg.hpp"

namespace germlab {

namespace {

std::vector<Poly> gradient(const Poly& f) {
    std::vector<Poly> g;
    for (int i = 0; i < f.nvars(); ++i) g.push_back(partial(f, i));
    return g;
}

// Drops variable `var` after setting it to zero.
Poly restrict_to_hyperplane(const Poly& f, int var) {
    int p = f.nvars();
    std::vector<Poly::Term> out;
    for (const auto& [m, c] : f.terms()) {
        if (m.e[var]) continue;
        Monomial r(std::max(1, p - 1));
        for (int i = 0, k = 0; i < p; ++i)
            if (i != var) r.e[k++] = m.e[i];
        out.emplace_back(r, c);
    }
    return Poly::from_terms(std::max(1, p - 1), std::move(out));
}

}  // namespace

ColengthResult milnor(const Poly& f, const ColengthOptions& opt) {
    if (f.nvars() < 1) throw std::invalid_argument("milnor: empty ring");
    return ideal_colength(gradient(f), f.nvars(), opt);
}

ColengthResult tjurina_number(const Poly& f, const ColengthOptions& opt) {
    std::vector<Poly> g = gradient(f);
    g.push_back(f);
    return ideal_colength(g, f.nvars(), opt);
}

BoundaryMilnorTriple boundary_milnor(const Poly& f, int b, const ColengthOptions& opt) {
    int p = f.nvars();
    if (b < 0 || b >= p) throw std::invalid_argument("boundary variable out of range");
    BoundaryMilnorTriple t;
    t.mu_f = milnor(f, opt);
    if (p == 1) {
        // restriction to a point: the empty function has Milnor number 0
        t.mu_restricted.certified = true;
        t.mu_restricted.certified_at = 2;
    } else {
        t.mu_restricted = milnor(restrict_to_hyperplane(f, b), opt);
    }
    std::vector<Poly> g = gradient(f);
    g[b] = g[b].mul_monomial(Monomial::var(p, b));
    t.mu_boundary = ideal_colength(g, p, opt);
    return t;
}

// ------------------------------------------------------------ ICIS Milnor

namespace {

struct Attempt {
    bool ok = false;
    int mu = 0;
    std::vector<int> orders;
};

Attempt lg_recursion(const std::vector<Poly>& f, const ColengthOptions& opt) {
    Attempt a;
    int p = f[0].nvars();
    ColengthResult base = ideal_colength(gradient(f[0]), p, opt);
    a.orders.push_back(base.certified_at);
    if (!base.certified) return a;
    int mu_prev = base.dim;
    for (std::size_t k = 2; k <= f.size(); ++k) {
        // k x k minors of the Jacobian of f_1..f_k, plus f_1..f_{k-1}
        PolyMatrix jac(k, std::vector<Poly>(p));
        for (std::size_t i = 0; i < k; ++i)
            for (int j = 0; j < p; ++j) jac[i][j] = partial(f[i], j);
        std::vector<Poly> gens(f.begin(), f.begin() + (k - 1));
        for (const auto& cols : subsets(p, static_cast<int>(k))) {
            PolyMatrix sub(k, std::vector<Poly>(k));
            for (std::size_t i = 0; i < k; ++i)
                for (std::size_t j = 0; j < k; ++j) sub[i][j] = jac[i][cols[j]];
            gens.push_back(determinant(sub));
        }
        ColengthResult c = ideal_colength(gens, p, opt);
        a.orders.push_back(c.certified_at);
        if (!c.certified) return a;
        mu_prev = c.dim - mu_prev;
    }
    a.ok = true;
    a.mu = mu_prev;
    return a;
}

}  // namespace

IcisMilnor milnor_icis(const std::vector<Poly>& f, const ColengthOptions& opt) {
    if (f.empty()) throw std::invalid_argument("milnor_icis: no equations");
    int p = f[0].nvars();
    if (static_cast<int>(f.size()) > p) throw std::invalid_argument("milnor_icis: more equations than variables");
    IcisMilnor out;
    // Candidate generator systems: the given order, then permutations, then
    // triangular recombinations g_i = f_i + sum_{j>i} c f_j with small c.
    std::vector<std::vector<Poly>> candidates;
    std::vector<int> perm(f.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        std::vector<Poly> g;
        for (int i : perm) g.push_back(f[i]);
        candidates.push_back(g);
    } while (std::next_permutation(perm.begin(), perm.end()));
    for (int c : {1, 2, 3, -1, 5, 7}) {
        std::sort(perm.begin(), perm.end());
        do {
            std::vector<Poly> g;
            for (int i : perm) g.push_back(f[i]);
            for (std::size_t i = 0; i < g.size(); ++i)
                for (std::size_t j = i + 1; j < g.size(); ++j)
                    g[i] += g[j] * Rational(static_cast<long long>(c) * static_cast<long long>(j - i));
            candidates.push_back(g);
        } while (std::next_permutation(perm.begin(), perm.end()));
    }
    ColengthOptions trial = opt;
    trial.max_order = std::min(opt.max_order, 24);
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& g : candidates) {
            Attempt a = lg_recursion(g, pass == 0 ? trial : opt);
            if (a.ok) {
                out.mu = a.mu;
                out.certified = true;
                out.used = g;
                out.orders = a.orders;
                return out;
            }
        }
        if (trial.max_order == opt.max_order) break;
    }
    return out;
}

// ------------------------------------------------------ singular Milnor

int boundary_dimension(Kind kind) {
    switch (kind) {
        case Kind::General: return 4;
        case Kind::Symmetric: return 3;
        case Kind::Skew: return 6;
    }
    return 0;
}

Poly defining_equation(const MatrixGerm& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("defining equation needs a square matrix");
    if (a.kind == Kind::Skew) return pfaffian(a.entries);
    return determinant(a.entries);
}

std::vector<Poly> submaximal_ideal(const MatrixGerm& a) {
    int m = a.rows();
    if (a.kind == Kind::Skew) {
        if (m < 4) return {Poly::constant(a.nvars(), Rational(1))};
        return pfaffian_values(a, m / 2 - 1);
    }
    if (m < 2) return {Poly::constant(a.nvars(), Rational(1))};
    return minor_values(a, m - 1);
}

SingularMilnor singular_milnor_hypersurface(const MatrixGerm& a, const ColengthOptions& opt) {
    if (a.rows() != a.cols()) throw std::invalid_argument("singular Milnor number needs a square matrix");
    if (a.kind == Kind::Skew && a.rows() % 2) throw std::invalid_argument("skew matrix of odd size");
    if (a.nvars() != boundary_dimension(a.kind))
        throw std::invalid_argument("singular Milnor number is defined here only for " +
                                    std::to_string(boundary_dimension(a.kind)) + " variables");
    SingularMilnor s;
    ColengthResult mf = milnor(defining_equation(a), opt);
    ColengthResult e = ideal_colength(submaximal_ideal(a), a.nvars(), opt);
    s.mu_f = mf.dim;
    s.e = e.dim;
    s.mu_a = mf.dim - e.dim;
    s.certified = mf.certified && e.certified;
    return s;
}

// ------------------------------------------------------- weights

namespace {

struct Ineq {
    QVector a;
    Rational b;  // a . c >= b
};

// Fourier-Motzkin: a point with A c >= b, choosing each coordinate at its
// lower bound when one exists.
std::optional<QVector> feasible_point(const std::vector<Ineq>& sys, int k) {
    std::vector<std::vector<Ineq>> stages;
    std::vector<Ineq> cur = sys;
    for (int j = k - 1; j >= 0; --j) {
        stages.push_back(cur);
        std::vector<Ineq> pos, neg, next;
        for (auto& r : cur) {
            int s = r.a[j].sign();
            if (s > 0)
                pos.push_back(r);
            else if (s < 0)
                neg.push_back(r);
            else
                next.push_back(r);
        }
        for (const auto& P : pos)
            for (const auto& N : neg) {
                Rational sp = P.a[j].inverse(), sn = (-N.a[j]).inverse();
                Ineq c;
                c.a.resize(k);
                for (int t = 0; t < k; ++t) c.a[t] = P.a[t] * sp + N.a[t] * sn;
                c.a[j] = 0;
                c.b = P.b * sp + N.b * sn;
                bool dup = false;
                for (const auto& o : next)
                    if (o.a == c.a && o.b == c.b) {
                        dup = true;
                        break;
                    }
                if (!dup) next.push_back(std::move(c));
            }
        cur = std::move(next);
    }
    for (const auto& r : cur)
        if (r.b.sign() > 0) return std::nullopt;
    QVector c(k, Rational(0));
    // stages[k-1-j] still involves variables 0..j
    for (int j = 0; j < k; ++j) {
        const auto& st = stages[k - 1 - j];
        std::optional<Rational> lo, hi;
        for (const auto& r : st) {
            if (r.a[j].is_zero()) continue;
            bool later = false;
            for (int t = j + 1; t < k; ++t)
                if (!r.a[t].is_zero()) later = true;
            if (later) continue;
            Rational rest = r.b;
            for (int t = 0; t < j; ++t) rest -= r.a[t] * c[t];
            Rational bound = rest / r.a[j];
            if (r.a[j].sign() > 0) {
                if (!lo || bound > *lo) lo = bound;
            } else {
                if (!hi || bound < *hi) hi = bound;
            }
        }
        if (lo && hi && *lo > *hi) return std::nullopt;
        c[j] = lo ? *lo : (hi ? *hi : Rational(0));
    }
    return c;
}

// Scales a rational vector to the primitive integer vector with the same direction.
std::vector<long long> primitive(const QVector& v) {
    mpz_class l = 1, g = 0;
    for (const auto& q : v) l = lcm(l, q.denominator());
    std::vector<mpz_class> ints;
    for (const auto& q : v) {
        mpz_class z = q.numerator() * (l / q.denominator());
        ints.push_back(z);
        g = gcd(g, z);
    }
    std::vector<long long> out;
    for (auto& z : ints) {
        if (g != 0) z /= g;
        if (!z.fits_slong_p()) throw std::overflow_error("weights too large");
        out.push_back(z.get_si());
    }
    return out;
}

// Solves the homogeneous system rows . u = 0 with u_i >= 1 for i < positive.
std::optional<QVector> positive_solution(const QMatrix& rows, int nunk, int positive) {
    std::vector<QVector> K = kernel(rows, nunk);
    int k = static_cast<int>(K.size());
    if (k == 0) return std::nullopt;
    std::vector<Ineq> sys;
    for (int i = 0; i < positive; ++i) {
        Ineq r;
        r.a.resize(k);
        for (int t = 0; t < k; ++t) r.a[t] = K[t][i];
        r.b = 1;
        sys.push_back(std::move(r));
    }
    auto c = feasible_point(sys, k);
    if (!c) return std::nullopt;
    QVector u(nunk, Rational(0));
    for (int t = 0; t < k; ++t)
        for (int i = 0; i < nunk; ++i) u[i] += (*c)[t] * K[t][i];
    return u;
}

}  // namespace

std::optional<Weights> quasi_homogeneous(const Poly& f) {
    if (f.is_zero()) throw std::invalid_argument("quasi_homogeneous: zero polynomial");
    int p = f.nvars();
    if (f.terms().front().first.degree() == 0) return std::nullopt;
    int d0 = f.terms().front().first.degree();
    bool homogeneous = true;
    for (const auto& t : f.terms())
        if (t.first.degree() != d0) homogeneous = false;
    if (homogeneous) return Weights{std::vector<long long>(p, 1), d0};
    // unknowns: w_0..w_{p-1}, d
    QMatrix rows;
    for (const auto& [m, c] : f.terms()) {
        QVector r(p + 1, Rational(0));
        for (int i = 0; i < p; ++i) r[i] = Rational(m.e[i]);
        r[p] = -1;
        rows.push_back(std::move(r));
    }
    auto u = positive_solution(rows, p + 1, p);
    if (!u) return std::nullopt;
    std::vector<long long> ints = primitive(*u);
    Weights w;
    w.weights.assign(ints.begin(), ints.begin() + p);
    w.degree = ints[p];
    return w;
}

std::optional<MatrixWeights> quasi_homogeneous_matrix(const MatrixGerm& a) {
    int p = a.nvars(), m = a.rows(), n = a.cols();
    int nunk = p + m + n;
    QMatrix rows;
    bool any = false;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j)
            for (const auto& [mono, c] : a.at(i, j).terms()) {
                any = true;
                QVector r(nunk, Rational(0));
                for (int v = 0; v < p; ++v) r[v] = Rational(mono.e[v]);
                r[p + i] = -1;
                r[p + m + j] = -1;
                rows.push_back(std::move(r));
            }
    if (!any) throw std::invalid_argument("quasi_homogeneous_matrix: zero matrix");
    auto u = positive_solution(rows, nunk, p);
    if (!u) return std::nullopt;
    std::vector<long long> ints = primitive(*u);
    MatrixWeights w;
    w.weights.assign(ints.begin(), ints.begin() + p);
    w.row_degrees.assign(ints.begin() + p, ints.begin() + p + m);
    w.col_degrees.assign(ints.begin() + p + m, ints.end());
    return w;
}

// ------------------------------------------------------------ ADE

std::string SingularityLabel::str() const {
    switch (family) {
        case Family::A: return "A" + std::to_string(index);
        case Family::D: return "D" + std::to_string(index);
        case Family::E: return "E" + std::to_string(index);
        case Family::Smooth: return "smooth";
        case Family::NotSimple: return "not-simple";
        case Family::NotIsolated: return "not-isolated";
    }
    return "?";
}

namespace {

using UPoly = std::vector<Rational>;  // coefficients, low degree first

void trim(UPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

UPoly umod(UPoly a, const UPoly& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    return a;
}

UPoly ugcd(UPoly a, UPoly b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        UPoly r = umod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

int udegree(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

}  // namespace

std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b) {
    UPoly g = ugcd(std::move(a), std::move(b));
    if (!g.empty()) {
        Rational lead = g.back().inverse();
        for (auto& c : g) c *= lead;
    }
    return g;
}

int distinct_linear_factors(const std::vector<Rational>& coeffs) {
    // coeffs[i] multiplies s^(d-i) t^i
    int d = static_cast<int>(coeffs.size()) - 1;
    bool allzero = true;
    for (const auto& c : coeffs)
        if (!c.is_zero()) allzero = false;
    if (allzero) return -1;
    // t^e divides the form when the leading s-coefficients vanish
    int e = 0;
    while (coeffs[e].is_zero()) ++e;
    // u(s) = form(s, 1): coefficient of s^k is coeffs[d-k]
    UPoly u(d + 1);
    for (int k = 0; k <= d; ++k) u[k] = coeffs[d - k];
    trim(u);
    UPoly du;
    for (std::size_t k = 1; k < u.size(); ++k) du.push_back(u[k] * Rational(static_cast<long long>(k)));
    int sqfree = udegree(u);
    if (!du.empty()) {
        UPoly g = ugcd(u, du);
        sqfree = udegree(u) - udegree(g);
    }
    return sqfree + (e > 0 ? 1 : 0);
}

SingularityLabel ade_recognize(const Poly& f, const ColengthOptions& opt) {
    SingularityLabel lab;
    if (!f.constant_term().is_zero()) throw std::invalid_argument("ade_recognize: germ does not vanish at 0");
    ColengthResult mu = milnor(f, opt);
    if (!mu.certified) {
        lab.family = Family::NotIsolated;
        return lab;
    }
    if (mu.dim == 0) {
        lab.family = Family::Smooth;
        return lab;
    }
    HessianInfo h = hessian_rank_and_kernel(f);
    int corank = static_cast<int>(h.kernel.size());
    if (corank <= 1) {
        lab.family = Family::A;
        lab.index = mu.dim;
        return lab;
    }
    if (corank >= 3) {
        lab.family = Family::NotSimple;
        return lab;
    }
    // cubic part restricted to the kernel plane s*v1 + t*v2
    int p = f.nvars();
    Poly cubic = homogeneous_part(f, 3);
    VariableSet st({"s", "t"});
    std::vector<Poly> images;
    for (int i = 0; i < p; ++i) {
        Poly img = Poly::monomial(Monomial::var(2, 0), h.kernel[0][i]) + Poly::monomial(Monomial::var(2, 1), h.kernel[1][i]);
        images.push_back(img);
    }
    Poly g = cubic.is_zero() ? Poly(2) : cubic.substitute(images);
    std::vector<Rational> coeffs(4);
    for (int i = 0; i <= 3; ++i) {
        Monomial m(2);
        m.e[0] = static_cast<uint16_t>(3 - i);
        m.e[1] = static_cast<uint16_t>(i);
        coeffs[i] = g.coeff(m);
    }
    int factors = distinct_linear_factors(coeffs);
    if (factors < 0) {
        lab.family = Family::NotSimple;
    } else if (factors >= 2) {
        lab.family = Family::D;
        lab.index = mu.dim;
    } else if (mu.dim >= 6 && mu.dim <= 8) {
        lab.family = Family::E;
        lab.index = mu.dim;
    } else {
        lab.family = Family::NotSimple;
    }
    return lab;
}

}  // namespace germlab
