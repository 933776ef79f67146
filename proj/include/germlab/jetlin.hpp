#pragma once

#include <cstdint>
#include <vector>

#include "germlab/poly.hpp"

namespace germlab {

// An element of the free module O^r, one polynomial per component.
using ModuleElement = std::vector<Poly>;

ModuleElement unit_element(int nvars, int rank, int component, const Monomial& m);
int element_order(const ModuleElement& v);

// Coordinates of O^r / m^H O^r. Indices run degree-major: all (component,
// monomial) pairs of degree 0, then degree 1, and so on; inside one degree the
// component is the slower key and monomials follow mono_less.
class IndexSpace {
public:
    IndexSpace(int nvars, int rank, int bound);

    int nvars() const { return p_; }
    int rank() const { return r_; }
    int bound() const { return h_; }
    int32_t size() const { return total_; }

    int32_t index(int component, const Monomial& m) const;
    int component(int32_t idx) const { return comp_[idx]; }
    const Monomial& monomial(int32_t idx) const { return mono_[mono_id_[idx]]; }
    int degree(int32_t idx) const { return deg_[idx]; }
    // First index of the given degree (degree == bound gives size()).
    int32_t degree_start(int d) const { return deg_start_[d]; }
    int32_t degree_count(int d) const { return deg_start_[d + 1] - deg_start_[d]; }
    // Index of x_var times idx, or -1 when that reaches the bound.
    int32_t shift(int32_t idx, int var) const;

private:
    int p_, r_, h_;
    int32_t total_ = 0;
    std::vector<std::vector<long long>> binom_;
    std::vector<int32_t> deg_start_;
    std::vector<int32_t> mono_count_;  // monomials per degree
    std::vector<int32_t> mono_start_;  // running count of monomials of lower degree
    std::vector<Monomial> mono_;       // all monomials of degree < bound, ordered
    std::vector<int32_t> mono_shift_;  // mono id * p + var -> mono id or -1
    std::vector<uint8_t> comp_;
    std::vector<uint16_t> deg_;
    std::vector<int32_t> mono_id_;

    int32_t mono_rank(const Monomial& m) const;
};

struct SparseRow {
    std::vector<int32_t> idx;
    std::vector<Rational> val;
    bool empty() const { return idx.empty(); }
};

SparseRow to_row(const ModuleElement& v, const IndexSpace& sp);
ModuleElement from_row(const SparseRow& row, const IndexSpace& sp);

// Echelon basis of a subspace of O^r / m^H O^r. Every row has leading
// coefficient 1 at a pivot held by no other row.
class Echelon {
public:
    explicit Echelon(const IndexSpace& sp);

    const IndexSpace& space() const { return *sp_; }
    const std::vector<SparseRow>& rows() const { return rows_; }
    bool is_pivot(int32_t idx) const { return pivot_of_[idx] >= 0; }
    int32_t pivot_row(int32_t idx) const { return pivot_of_[idx]; }

    // Reduces the leading terms of v; inserts the remainder if nonzero and
    // returns its row id, else -1.
    int32_t insert(const SparseRow& v);
    // Full reduction: no term of the result sits on a pivot.
    SparseRow reduce(const SparseRow& v);
    // Adds every product of a variable with a basis row, until closed.
    void close_under_variables();
    // Back-substitution so every row is reduced against all other pivots.
    void interreduce();

    std::vector<int32_t> pivots_per_degree() const;

private:
    const IndexSpace* sp_;
    std::vector<SparseRow> rows_;
    std::vector<int32_t> pivot_of_;
    std::vector<std::size_t> shifted_upto_;

    std::vector<Rational> acc_;
    std::vector<char> live_;
    std::vector<int32_t> heap_;

    void scatter(const SparseRow& v);
    int32_t pop_min();
    void push(int32_t i);
    SparseRow drain(int32_t first);
};

struct JetSpan {
    int N = 0;
    int rank = 0;
    int nvars = 0;
    std::vector<ModuleElement> rows;
    // leading (component, monomial) of each row
    std::vector<std::pair<int, Monomial>> pivots;
};

struct CobasisEntry {
    int component;
    Monomial monomial;
};

struct ColengthResult {
    int dim = 0;
    std::vector<CobasisEntry> cobasis;
    int certified_at = 0;
    bool certified = false;
};

struct ColengthOptions {
    int max_order = 64;
    // Above this many coordinates the search stops and reports uncertified.
    int64_t max_coordinates = 4'000'000;
};

JetSpan span_build(const std::vector<ModuleElement>& gens, int rank, int N, int nvars = -1);
ModuleElement reduce(const ModuleElement& v, const JetSpan& span);
ColengthResult colength(const std::vector<ModuleElement>& gens, int rank, int nvars,
                        const ColengthOptions& opt = {});
bool span_equal(const std::vector<ModuleElement>& g1, const std::vector<ModuleElement>& g2, int rank, int N,
                int nvars = -1);

// Ideal helpers: rank-one wrappers.
std::vector<ModuleElement> as_ideal(const std::vector<Poly>& gens);
ColengthResult ideal_colength(const std::vector<Poly>& gens, int nvars, const ColengthOptions& opt = {});

using PolyMatrix = std::vector<std::vector<Poly>>;
PolyMatrix matmul_trunc(const PolyMatrix& a, const PolyMatrix& b, int bound);
PolyMatrix invert_matrix_jet(const PolyMatrix& p, int N);

}  // namespace germlab
