#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "germlab/rational.hpp"

namespace germlab {

constexpr int kMaxVars = 16;

class VariableSet {
public:
    VariableSet() = default;
    explicit VariableSet(std::vector<std::string> names);

    int size() const { return static_cast<int>(names_.size()); }
    const std::string& name(int i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }
    // -1 when absent
    int index_of(const std::string& name) const;
    // A copy with extra names appended; throws on clashes.
    VariableSet extended(const std::vector<std::string>& extra) const;

    friend bool operator==(const VariableSet& a, const VariableSet& b) { return a.names_ == b.names_; }

private:
    std::vector<std::string> names_;
};

struct Monomial {
    std::array<uint16_t, kMaxVars> e{};
    uint8_t n = 0;

    Monomial() = default;
    explicit Monomial(int nvars) : n(static_cast<uint8_t>(nvars)) {}
    static Monomial var(int nvars, int i, int power = 1);
    static Monomial from(const std::vector<int>& exps);

    int degree() const;
    uint16_t operator[](int i) const { return e[i]; }
    uint16_t& operator[](int i) { return e[i]; }
    bool divides(const Monomial& o) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.n == b.n && a.e == b.e; }
    friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }
};

// Graded order: lower total degree first; within a degree the lexicographically
// larger exponent vector comes first (x^2 < xy < y^2 with x the first variable).
bool mono_less(const Monomial& a, const Monomial& b);

struct MonoLess {
    bool operator()(const Monomial& a, const Monomial& b) const { return mono_less(a, b); }
};

// Sparse polynomial with terms sorted by mono_less and no zero coefficients.
class Poly {
public:
    using Term = std::pair<Monomial, Rational>;

    Poly() = default;
    explicit Poly(int nvars) : nvars_(nvars) {}
    static Poly constant(int nvars, const Rational& c);
    static Poly var(int nvars, int i);
    static Poly monomial(const Monomial& m, const Rational& c = Rational(1));
    // Takes unsorted terms, merges duplicates, drops zeros.
    static Poly from_terms(int nvars, std::vector<Term> terms);

    int nvars() const { return nvars_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }

    // -1 for the zero polynomial
    int degree() const;
    // lowest total degree of a term, -1 for zero
    int order() const;
    Rational coeff(const Monomial& m) const;
    Rational constant_term() const;
    bool is_constant() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Rational& c);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly mul_monomial(const Monomial& m, const Rational& c = Rational(1)) const;
    // Product with every term of degree >= bound dropped.
    static Poly mul_trunc(const Poly& a, const Poly& b, int bound);
    Poly pow(int k) const;
    Poly pow_trunc(int k, int bound) const;

    // Substitute polynomials for variables (all in the target ring).
    Poly substitute(const std::vector<Poly>& images) const;
    Poly substitute_trunc(const std::vector<Poly>& images, int bound) const;
    // Re-index into a ring with more or reordered variables: variable i maps to index map[i].
    Poly embed(int new_nvars, const std::vector<int>& map) const;

    friend bool operator<(const Poly&, const Poly&) = delete;

private:
    int nvars_ = 0;
    std::vector<Term> terms_;
    void normalize();
};

Poly partial(const Poly& f, int i);
Poly jet(const Poly& f, int order);
// Homogeneous component of the given degree.
Poly homogeneous_part(const Poly& f, int degree);

std::string to_string(const Poly& f, const VariableSet& vars);
std::string to_string(const Monomial& m, const VariableSet& vars);

struct WeightVector {
    std::vector<Rational> weights;
    Rational degree;
};

std::set<Rational> weighted_degree_spectrum(const Poly& f, const std::vector<Rational>& weights);

struct HessianInfo {
    int rank = 0;
    std::vector<std::vector<Rational>> kernel;
};
HessianInfo hessian_rank_and_kernel(const Poly& f);

}  // namespace germlab
