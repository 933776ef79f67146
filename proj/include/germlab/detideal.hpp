#pragma once

#include <string>
#include <vector>

#include "germlab/jetlin.hpp"
#include "germlab/poly.hpp"

namespace germlab {

enum class Kind { General, Symmetric, Skew };

std::string kind_name(Kind k);
Kind parse_kind(const std::string& s);

struct MatrixGerm {
    VariableSet vars;
    Kind kind = Kind::General;
    PolyMatrix entries;

    MatrixGerm() = default;
    MatrixGerm(VariableSet v, Kind k, PolyMatrix e);

    int rows() const { return static_cast<int>(entries.size()); }
    int cols() const { return entries.empty() ? 0 : static_cast<int>(entries[0].size()); }
    int nvars() const { return vars.size(); }
    const Poly& at(int i, int j) const { return entries[i][j]; }

    // Throws std::invalid_argument when shape or kind constraints fail.
    void validate() const;
    bool has_unit_entry() const;
    MatrixGerm transposed() const;
};

using MultiIndex = std::vector<int>;

struct Minor {
    MultiIndex rows;
    MultiIndex cols;
    Poly value;
};

struct PfaffianEntry {
    MultiIndex idx;
    Poly value;
};

std::vector<MultiIndex> subsets(int n, int k);

Poly determinant(const PolyMatrix& a);
// Pfaffian of a skew matrix given in full form.
Poly pfaffian(const PolyMatrix& a);

std::vector<Minor> minors(const MatrixGerm& a, int t);
std::vector<PfaffianEntry> pfaffians(const MatrixGerm& a, int s);
std::vector<Poly> minor_values(const MatrixGerm& a, int t);
std::vector<Poly> pfaffian_values(const MatrixGerm& a, int s);

int expected_codim(Kind kind, int m, int n, int t);

// For an m x (m+1) or (m+1) x m matrix: signed maximal minors f_i obtained by
// deleting column (resp. row) i, so that the product with the matrix vanishes.
std::vector<Poly> hilbert_burch_vector(const MatrixGerm& a);
// For a skew matrix of odd size: f_i = (-1)^i Pf of the matrix without row and column i.
std::vector<Poly> buchsbaum_eisenbud_vector(const MatrixGerm& a);

struct UnitReduction {
    MatrixGerm reduced;
    int steps = 0;
};
// Removes unit entries by exact polynomial Schur complements; the result has
// no entry with a nonzero constant term. Each step preserves the
// determinantal structure up to a unit factor.
UnitReduction reduce_units(const MatrixGerm& a);

}  // namespace germlab
