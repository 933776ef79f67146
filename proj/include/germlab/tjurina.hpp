#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "germlab/detideal.hpp"
#include "germlab/invariants.hpp"

namespace germlab {

// One affine chart of the Tjurina transform {(x, [u]) : u A(x) = 0}.
struct ChartGerm {
    int chart = 0;  // index of the homogeneous coordinate set to 1
    VariableSet vars;  // original variables, then the chart parameters
    std::vector<Poly> equations;
    // eliminated variable -> its jet in the remaining variables
    std::vector<std::pair<std::string, Poly>> eliminated;
    int jet_order = 0;  // 0 before elimination
};

std::vector<ChartGerm> tjurina_charts(const MatrixGerm& a);

// Solves every equation with a unit linear coefficient for that variable,
// exactly up to degree N, and substitutes it into the others.
ChartGerm eliminate_units(const ChartGerm& c, int N);

// The remaining equations restricted to the variables still present.
struct ResidualGerm {
    VariableSet vars;
    std::vector<Poly> equations;
};
ResidualGerm residual(const ChartGerm& c);

// Substitutes the recorded jets into the original chart equations; true when
// the dropped ones vanish and the kept ones match, modulo degree > N.
bool elimination_consistent(const ChartGerm& original, const ChartGerm& reduced);

struct ChartInvariants {
    bool smooth = false;
    // chart origin is not on the transform (an equation has a constant term)
    bool off_transform = false;
    ColengthResult mu;
    std::optional<ColengthResult> tau;
    std::optional<SingularityLabel> label;
    // singular points of the exceptional fiber away from this chart's origin
    bool caveat = false;
    bool caveat_checked = false;
    ResidualGerm residual;
    ChartGerm reduced;
    bool certified() const { return off_transform || smooth || mu.certified; }
};

// Elimination at order 16, repeated at (certified Milnor order + 2) when that is larger.
ChartInvariants chart_invariants(const MatrixGerm& a, const ChartGerm& chart, const ColengthOptions& opt = {});

struct B3Result {
    int b0 = 1, b1 = 0, b2 = 1;
    int b3 = 0;
    bool certified = false;
    bool caveat = false;
    std::vector<ChartInvariants> charts;
};
B3Result b3_threefold(const MatrixGerm& a, const ColengthOptions& opt = {});

}  // namespace germlab
