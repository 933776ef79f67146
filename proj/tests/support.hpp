#pragma once

#include <initializer_list>
#include <random>
#include <string>
#include <vector>

#include "germlab/detideal.hpp"
#include "germlab/parse.hpp"
#include "germlab/poly.hpp"

namespace testing {

using namespace germlab;

inline VariableSet vars(std::initializer_list<const char*> names) {
    std::vector<std::string> v;
    for (const char* n : names) v.emplace_back(n);
    return VariableSet(v);
}

inline Poly P(const std::string& text, const VariableSet& vs) { return parse_poly(text, vs); }

inline MatrixGerm mat(const VariableSet& vs, Kind kind, std::initializer_list<std::initializer_list<const char*>> rows) {
    PolyMatrix e;
    for (auto r : rows) {
        std::vector<Poly> row;
        for (const char* s : r) row.push_back(parse_poly(s, vs));
        e.push_back(std::move(row));
    }
    return MatrixGerm(vs, kind, std::move(e));
}

inline MatrixGerm mat(const VariableSet& vs, std::initializer_list<std::initializer_list<const char*>> rows) {
    return mat(vs, Kind::General, rows);
}

// Random polynomial with small integer coefficients and terms of degree in [lo, hi].
inline Poly random_poly(std::mt19937& rng, int nvars, int lo, int hi, int terms) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(lo, hi), var(0, nvars - 1);
    std::vector<Poly::Term> t;
    for (int i = 0; i < terms; ++i) {
        Monomial m(nvars);
        int d = deg(rng);
        for (int k = 0; k < d; ++k) m[var(rng)]++;
        int c = coef(rng);
        if (c) t.emplace_back(m, Rational(c));
    }
    return Poly::from_terms(nvars, std::move(t));
}

inline PolyMatrix random_matrix(std::mt19937& rng, int m, int n, int nvars, int lo, int hi, int terms) {
    PolyMatrix a(m, std::vector<Poly>(n));
    for (auto& row : a)
        for (auto& f : row) f = random_poly(rng, nvars, lo, hi, terms);
    return a;
}

// Identity plus a random matrix with entries of order >= 1.
inline PolyMatrix random_unimodular(std::mt19937& rng, int m, int nvars) {
    PolyMatrix p = random_matrix(rng, m, m, nvars, 1, 2, 2);
    for (int i = 0; i < m; ++i) p[i][i] += Poly::constant(nvars, Rational(1));
    return p;
}

inline PolyMatrix random_skew(std::mt19937& rng, int m, int nvars, int lo, int hi, int terms) {
    PolyMatrix a(m, std::vector<Poly>(m, Poly(nvars)));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            a[i][j] = random_poly(rng, nvars, lo, hi, terms);
            a[j][i] = -a[i][j];
        }
    return a;
}

inline Poly dot(const std::vector<Poly>& f, const std::vector<Poly>& g) {
    Poly s(f.empty() ? 0 : f[0].nvars());
    for (std::size_t i = 0; i < f.size(); ++i) s += f[i] * g[i];
    return s;
}

}  // namespace testing
