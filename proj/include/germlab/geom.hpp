#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germlab/detideal.hpp"

namespace germlab {

// C(a, b) with C(a, b) = 0 for b < 0 or b > a.
long long binomial(long long a, long long b);

struct GenericProfile {
    int expected_codim = 0;
    int ambient_dim = 0;
    // -1 when the expected codimension exceeds the ambient dimension
    int variety_dim = 0;
    bool isolated = false;
    bool smoothable = false;
    // general kind only
    std::optional<long long> link_reduced_euler;
    std::optional<long long> euler_obstruction;
};

// s is the minor size (general, symmetric) or the Pfaffian half-size (skew).
GenericProfile generic_profile(Kind kind, int m, int n, int s, int p);

struct Summand {
    enum class Type { Sphere, Points, Contractible, Empty, LinkBlock };
    Type type = Type::Contractible;
    int dim = 0;    // sphere dimension
    int count = 0;  // number of points
    // unresolved block: k-fold suspension of L^{s,p}_{m,n}
    int m = 0, n = 0, s = 0, p = 0, suspension = 0;
    int multiplicity = 1;
};

struct HomotopyDescriptor {
    std::vector<Summand> summands;
    bool resolved() const;
    // reduced Euler characteristic of the wedge; requires resolved()
    long long reduced_euler() const;
    std::string str() const;
};

HomotopyDescriptor link_homotopy_2xn(int n, int p);

// Reduced Euler characteristic of the complex link of M^s_{m,n}; the empty
// link (s <= 1) gives -1.
long long complex_link_reduced_euler(int m, int n, int s);

enum class EulerMode { Bouquet, Polar };

struct EulerInputs {
    std::map<int, long long> lambdas;                      // r -> lambda(r)
    std::map<std::pair<int, int>, long long> multiplicities;  // (r, i) -> m_i(X^{r+1})
};

// Bouquet mode returns the reduced Euler characteristic of the essential
// smoothing (link_euler is the reduced Euler characteristic of L^{s,p}_{m,n});
// polar mode returns the unreduced one.
long long euler_characteristic(EulerMode mode, int m, int n, int s, int p, const EulerInputs& in,
                               long long link_euler = 0);

// The alternating sum with the binomial read literally (C(a,-1) = 0), which
// drops the r = s-1 spheres.
long long bouquet_sum_literal(int m, int n, int s, int p, const std::map<int, long long>& lambdas,
                              long long link_euler);

HomotopyDescriptor bouquet_descriptor(int m, int n, int s, int p, const std::map<int, long long>& lambdas);

enum class MatrixType { Square, Symmetric, Skew };
MatrixType parse_matrix_type(const std::string& s);
std::string matrix_type_name(MatrixType t);

struct MilnorFiberTopology {
    MatrixType type = MatrixType::Square;
    int m = 0;
    // degrees of exterior generators (rational cohomology)
    std::vector<int> generators;
    // symmetric, m even: the extra module generator e_m
    std::optional<int> module_generator;
    // symmetric case: degrees of the mod-2 exterior generators s_2..s_m
    std::vector<int> mod2_generators;
    // pi_j of the fiber is stable for j < stable_bound
    int stable_bound = 0;
    int ambient_dim = 0;  // N
    int link_sphere_dim = 0;  // N - 2
};

MilnorFiberTopology milnor_fiber_topology(MatrixType type, int m);
// pi_j of the stable symmetric space attached to the type: "0", "Z", "Z2".
std::string stable_homotopy_group(MatrixType type, int j);

}  // namespace germlab
