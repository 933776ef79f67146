#pragma once

#include <optional>
#include <string>
#include <vector>

#include "germlab/detideal.hpp"
#include "germlab/jetlin.hpp"
#include "germlab/poly.hpp"

namespace germlab {

ColengthResult milnor(const Poly& f, const ColengthOptions& opt = {});
ColengthResult tjurina_number(const Poly& f, const ColengthOptions& opt = {});

struct BoundaryMilnorTriple {
    ColengthResult mu_f;
    ColengthResult mu_restricted;
    ColengthResult mu_boundary;
    bool certified() const { return mu_f.certified && mu_restricted.certified && mu_boundary.certified; }
};
// boundary is the variable index defining the boundary hyperplane {x_b = 0}
BoundaryMilnorTriple boundary_milnor(const Poly& f, int boundary, const ColengthOptions& opt = {});

struct IcisMilnor {
    int mu = 0;
    bool certified = false;
    // generators actually used (after generic recombination) and the
    // certification order of every colength in the recursion
    std::vector<Poly> used;
    std::vector<int> orders;
};
IcisMilnor milnor_icis(const std::vector<Poly>& f, const ColengthOptions& opt = {});

struct SingularMilnor {
    int mu_f = 0;
    int e = 0;
    int mu_a = 0;
    bool certified = false;
};
// Boundary dimension where the determinantal hypersurface still has an
// isolated singularity: 4 general, 3 symmetric, 6 skew.
int boundary_dimension(Kind kind);
// Defining equation: det for general/symmetric, Pf for skew.
Poly defining_equation(const MatrixGerm& a);
// Generators of the singular locus: submaximal minors or Pfaffians.
std::vector<Poly> submaximal_ideal(const MatrixGerm& a);
SingularMilnor singular_milnor_hypersurface(const MatrixGerm& a, const ColengthOptions& opt = {});

struct Weights {
    std::vector<long long> weights;
    long long degree = 0;
};
std::optional<Weights> quasi_homogeneous(const Poly& f);

struct MatrixWeights {
    std::vector<long long> weights;
    std::vector<long long> row_degrees;
    std::vector<long long> col_degrees;
};
std::optional<MatrixWeights> quasi_homogeneous_matrix(const MatrixGerm& a);

enum class Family { A, D, E, Smooth, NotSimple, NotIsolated };

struct SingularityLabel {
    Family family = Family::Smooth;
    int index = 0;
    std::string str() const;
    friend bool operator==(const SingularityLabel& a, const SingularityLabel& b) {
        return a.family == b.family && a.index == b.index;
    }
};

SingularityLabel ade_recognize(const Poly& f, const ColengthOptions& opt = {});

// Number of distinct linear factors of a binary form given by coefficients of
// s^d, s^(d-1) t, ..., t^d (zero form gives -1).
int distinct_linear_factors(const std::vector<Rational>& coeffs);

// Monic gcd of univariate polynomials given low degree first; empty for 0.
std::vector<Rational> univariate_gcd(std::vector<Rational> a, std::vector<Rational> b);

}  // namespace germlab
