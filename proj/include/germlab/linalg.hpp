#pragma once

#include <optional>
#include <vector>

#include "germlab/rational.hpp"

namespace germlab {

using QMatrix = std::vector<std::vector<Rational>>;
using QVector = std::vector<Rational>;

// Reduced row echelon form in place; returns the pivot columns.
std::vector<int> rref(QMatrix& a, int ncols);
int rank(QMatrix a, int ncols);
// Basis of {v : a v = 0}.
std::vector<QVector> kernel(QMatrix a, int ncols);
std::optional<QMatrix> inverse(const QMatrix& a);
// One solution of a x = b, if any.
std::optional<QVector> solve(const QMatrix& a, const QVector& b, int ncols);

}  // namespace germlab
