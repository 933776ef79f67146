#include "germlab/poly.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <stdexcept>

#include "germlab/linalg.hpp"

namespace germlab {

VariableSet::VariableSet(std::vector<std::string> names) : names_(std::move(names)) {
    if (names_.empty()) throw std::invalid_argument("empty variable set");
    if (static_cast<int>(names_.size()) > kMaxVars)
        throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
    for (std::size_t i = 0; i < names_.size(); ++i)
        for (std::size_t j = i + 1; j < names_.size(); ++j)
            if (names_[i] == names_[j]) throw std::invalid_argument("duplicate variable '" + names_[i] + "'");
}

int VariableSet::index_of(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i)
        if (names_[i] == name) return static_cast<int>(i);
    return -1;
}

VariableSet VariableSet::extended(const std::vector<std::string>& extra) const {
    std::vector<std::string> all = names_;
    all.insert(all.end(), extra.begin(), extra.end());
    return VariableSet(all);
}

Monomial Monomial::var(int nvars, int i, int power) {
    Monomial m(nvars);
    m.e[i] = static_cast<uint16_t>(power);
    return m;
}

Monomial Monomial::from(const std::vector<int>& exps) {
    Monomial m(static_cast<int>(exps.size()));
    for (std::size_t i = 0; i < exps.size(); ++i) m.e[i] = static_cast<uint16_t>(exps[i]);
    return m;
}

int Monomial::degree() const {
    int d = 0;
    for (int i = 0; i < n; ++i) d += e[i];
    return d;
}

bool Monomial::divides(const Monomial& o) const {
    for (int i = 0; i < n; ++i)
        if (e[i] > o.e[i]) return false;
    return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial r(a.n);
    for (int i = 0; i < a.n; ++i) {
        unsigned s = unsigned(a.e[i]) + b.e[i];
        if (s > std::numeric_limits<uint16_t>::max()) throw std::overflow_error("exponent overflow");
        r.e[i] = static_cast<uint16_t>(s);
    }
    return r;
}

bool mono_less(const Monomial& a, const Monomial& b) {
    int da = a.degree(), db = b.degree();
    if (da != db) return da < db;
    for (int i = 0; i < a.n; ++i)
        if (a.e[i] != b.e[i]) return a.e[i] > b.e[i];
    return false;
}

Poly Poly::constant(int nvars, const Rational& c) {
    Poly p(nvars);
    if (!c.is_zero()) p.terms_.emplace_back(Monomial(nvars), c);
    return p;
}

Poly Poly::var(int nvars, int i) {
    Poly p(nvars);
    p.terms_.emplace_back(Monomial::var(nvars, i), Rational(1));
    return p;
}

Poly Poly::monomial(const Monomial& m, const Rational& c) {
    Poly p(m.n);
    if (!c.is_zero()) p.terms_.emplace_back(m, c);
    return p;
}

Poly Poly::from_terms(int nvars, std::vector<Term> terms) {
    Poly p(nvars);
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
}

void Poly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return mono_less(a.first, b.first); });
    std::size_t out = 0;
    for (std::size_t i = 0; i < terms_.size();) {
        std::size_t j = i + 1;
        Rational c = std::move(terms_[i].second);
        while (j < terms_.size() && terms_[j].first == terms_[i].first) {
            c += terms_[j].second;
            ++j;
        }
        if (!c.is_zero()) {
            terms_[out].first = terms_[i].first;
            terms_[out].second = std::move(c);
            ++out;
        }
        i = j;
    }
    terms_.resize(out);
}

int Poly::degree() const {
    int d = -1;
    for (const auto& t : terms_) d = std::max(d, t.first.degree());
    return d;
}

int Poly::order() const { return terms_.empty() ? -1 : terms_.front().first.degree(); }

Rational Poly::coeff(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& k) { return mono_less(t.first, k); });
    if (it != terms_.end() && it->first == m) return it->second;
    return Rational(0);
}

Rational Poly::constant_term() const {
    if (!terms_.empty() && terms_.front().first.degree() == 0) return terms_.front().second;
    return Rational(0);
}

bool Poly::is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first.degree() == 0); }

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& t : r.terms_) t.second = -t.second;
    return r;
}

namespace {

template <bool Subtract>
void merge_into(std::vector<Poly::Term>& a, const std::vector<Poly::Term>& b) {
    std::vector<Poly::Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && mono_less(a[i].first, b[j].first))) {
            out.push_back(std::move(a[i++]));
        } else if (i == a.size() || mono_less(b[j].first, a[i].first)) {
            out.emplace_back(b[j].first, Subtract ? -b[j].second : b[j].second);
            ++j;
        } else {
            Rational c = std::move(a[i].second);
            if (Subtract)
                c -= b[j].second;
            else
                c += b[j].second;
            if (!c.is_zero()) out.emplace_back(a[i].first, std::move(c));
            ++i;
            ++j;
        }
    }
    a = std::move(out);
}

void check_ring(int a, int b) {
    if (a != b) throw std::invalid_argument("polynomials over different variable sets");
}

}  // namespace

Poly& Poly::operator+=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        *this = o;
        return *this;
    }
    check_ring(nvars_, o.nvars_);
    merge_into<false>(terms_, o.terms_);
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.terms_.empty()) return *this;
    if (terms_.empty()) {
        *this = -o;
        return *this;
    }
    check_ring(nvars_, o.nvars_);
    merge_into<true>(terms_, o.terms_);
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.second *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) { return Poly::mul_trunc(a, b, std::numeric_limits<int>::max()); }

Poly Poly::mul_trunc(const Poly& a, const Poly& b, int bound) {
    if (a.is_zero() || b.is_zero()) return Poly(std::max(a.nvars_, b.nvars_));
    check_ring(a.nvars_, b.nvars_);
    std::vector<Term> out;
    out.reserve(a.terms_.size() * b.terms_.size());
    for (const auto& s : a.terms_) {
        int ds = s.first.degree();
        for (const auto& t : b.terms_) {
            if (ds + t.first.degree() >= bound) break;
            out.emplace_back(s.first * t.first, s.second * t.second);
        }
    }
    return from_terms(a.nvars_, std::move(out));
}

Poly Poly::mul_monomial(const Monomial& m, const Rational& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.emplace_back(t.first * m, t.second * c);
    return r;
}

Poly Poly::pow(int k) const { return pow_trunc(k, std::numeric_limits<int>::max()); }

Poly Poly::pow_trunc(int k, int bound) const {
    if (k < 0) throw std::invalid_argument("negative exponent");
    Poly result = constant(nvars_, Rational(1));
    Poly base = *this;
    while (k > 0) {
        if (k & 1) result = mul_trunc(result, base, bound);
        k >>= 1;
        if (k) base = mul_trunc(base, base, bound);
    }
    return jet(result, bound - 1);
}

Poly Poly::substitute(const std::vector<Poly>& images) const {
    return substitute_trunc(images, std::numeric_limits<int>::max());
}

Poly Poly::substitute_trunc(const std::vector<Poly>& images, int bound) const {
    if (static_cast<int>(images.size()) != nvars_) throw std::invalid_argument("substitution arity mismatch");
    int target = images.empty() ? 0 : images[0].nvars();
    for (const auto& im : images) target = std::max(target, im.nvars());
    Poly result(target);
    // cache powers per variable
    std::vector<std::vector<Poly>> powers(nvars_);
    for (const auto& t : terms_) {
        Poly term = constant(target, t.second);
        for (int i = 0; i < nvars_ && !term.is_zero(); ++i) {
            int e = t.first.e[i];
            if (!e) continue;
            auto& pw = powers[i];
            if (pw.empty()) pw.push_back(constant(target, Rational(1)));
            while (static_cast<int>(pw.size()) <= e) pw.push_back(mul_trunc(pw.back(), images[i], bound));
            term = mul_trunc(term, pw[e], bound);
        }
        result += term;
    }
    return result;
}

Poly Poly::embed(int new_nvars, const std::vector<int>& map) const {
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& t : terms_) {
        Monomial m(new_nvars);
        for (int i = 0; i < nvars_; ++i)
            if (t.first.e[i]) {
                if (map[i] < 0) throw std::invalid_argument("embedding drops a used variable");
                m.e[map[i]] = static_cast<uint16_t>(m.e[map[i]] + t.first.e[i]);
            }
        out.emplace_back(m, t.second);
    }
    return from_terms(new_nvars, std::move(out));
}

Poly partial(const Poly& f, int i) {
    if (i < 0 || i >= f.nvars()) throw std::out_of_range("partial: variable index");
    std::vector<Poly::Term> out;
    for (const auto& t : f.terms()) {
        int e = t.first.e[i];
        if (!e) continue;
        Monomial m = t.first;
        m.e[i] = static_cast<uint16_t>(e - 1);
        out.emplace_back(m, t.second * Rational(e));
    }
    return Poly::from_terms(f.nvars(), std::move(out));
}

Poly jet(const Poly& f, int order) {
    std::vector<Poly::Term> out;
    for (const auto& t : f.terms()) {
        if (t.first.degree() > order) break;
        out.push_back(t);
    }
    return Poly::from_terms(f.nvars(), std::move(out));
}

Poly homogeneous_part(const Poly& f, int degree) {
    std::vector<Poly::Term> out;
    for (const auto& t : f.terms())
        if (t.first.degree() == degree) out.push_back(t);
    return Poly::from_terms(f.nvars(), std::move(out));
}

std::string to_string(const Monomial& m, const VariableSet& vars) {
    std::string s;
    for (int i = 0; i < m.n; ++i) {
        if (!m.e[i]) continue;
        if (!s.empty()) s += "*";
        s += vars.name(i);
        if (m.e[i] > 1) s += "^" + std::to_string(m.e[i]);
    }
    return s.empty() ? "1" : s;
}

std::string to_string(const Poly& f, const VariableSet& vars) {
    if (f.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [m, c] : f.terms()) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                s += "-";
                a = -a;
            }
        } else {
            s += a.sign() < 0 ? " - " : " + ";
            if (a.sign() < 0) a = -a;
        }
        first = false;
        if (m.degree() == 0) {
            s += a.str();
        } else if (a.is_one()) {
            s += to_string(m, vars);
        } else {
            s += a.str() + "*" + to_string(m, vars);
        }
    }
    return s;
}

std::set<Rational> weighted_degree_spectrum(const Poly& f, const std::vector<Rational>& weights) {
    if (f.is_zero()) throw std::invalid_argument("weighted degree of the zero polynomial");
    if (static_cast<int>(weights.size()) != f.nvars()) throw std::invalid_argument("weight vector length");
    std::set<Rational> out;
    for (const auto& t : f.terms()) {
        Rational d(0);
        for (int i = 0; i < f.nvars(); ++i)
            if (t.first.e[i]) d += weights[i] * Rational(t.first.e[i]);
        out.insert(d);
    }
    return out;
}

HessianInfo hessian_rank_and_kernel(const Poly& f) {
    int p = f.nvars();
    for (const auto& t : f.terms())
        if (t.first.degree() <= 1) throw std::invalid_argument("hessian: germ has a nonzero constant or linear part");
    QMatrix h(p, QVector(p, Rational(0)));
    for (const auto& [m, c] : f.terms()) {
        if (m.degree() != 2) continue;
        int i = -1, j = -1;
        for (int k = 0; k < p; ++k) {
            if (m.e[k] == 2) i = j = k;
            if (m.e[k] == 1) (i < 0 ? i : j) = k;
        }
        if (i == j)
            h[i][i] += c * Rational(2);
        else {
            h[i][j] += c;
            h[j][i] += c;
        }
    }
    HessianInfo info;
    info.kernel = kernel(h, p);
    info.rank = p - static_cast<int>(info.kernel.size());
    return info;
}

}  // namespace germlab
