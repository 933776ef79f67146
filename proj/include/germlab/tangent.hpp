#pragma once

#include <string>
#include <vector>

#include "germlab/detideal.hpp"
#include "germlab/jetlin.hpp"

namespace germlab {

// GL / SL act on general matrices by left and right multiplication.
// Sym / SymSL act by congruence on symmetric matrices; Skew / SkewGL on skew ones.
// The Sl-flavoured variants restrict the Lie algebra to trace-free matrices.
enum class Group { GL, SL, Sym, SymSL, Skew, SkewGL };

std::string group_name(Group g);
Group parse_group(const std::string& s);

// Packed coordinates: all entries (general), i <= j (symmetric), i < j (skew).
int packed_rank(Kind kind, int m, int n);
ModuleElement pack(const PolyMatrix& a, Kind kind, int nvars);
PolyMatrix unpack(const ModuleElement& v, Kind kind, int m, int n, int nvars);

struct TauOptions {
    ColengthOptions colength;
    bool strict_units = false;
};

struct TauResult {
    ColengthResult result;
    int unit_reductions = 0;
    // the matrix actually used, after unit reduction
    MatrixGerm matrix;
};

std::vector<ModuleElement> tangent_generators(const MatrixGerm& a, Group g);
TauResult tau(const MatrixGerm& a, Group g, const TauOptions& opt = {});
// For a row matrix (complete intersection) or an m x (m+1) matrix.
TauResult tau_icis(const MatrixGerm& a, const TauOptions& opt = {});

struct DeterminacyResult {
    int k = -1;
    bool certified = false;
    int certified_at = 0;
};
DeterminacyResult determinacy_bound(const MatrixGerm& a, Group g, const TauOptions& opt = {});

struct UnfoldingBasis {
    std::vector<PolyMatrix> basis;
    int tau = 0;
    bool certified = false;
    int certified_at = 0;
};
UnfoldingBasis miniversal_unfolding(const MatrixGerm& a, Group g, const TauOptions& opt = {});

int corank_differential(const MatrixGerm& a);

}  // namespace germlab
