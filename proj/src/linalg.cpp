#include "germlab/linalg.hpp"

#include <utility>

namespace germlab {

std::vector<int> rref(QMatrix& a, int ncols) {
    std::vector<int> pivots;
    int rows = static_cast<int>(a.size());
    int r = 0;
    for (int c = 0; c < ncols && r < rows; ++c) {
        int sel = -1;
        for (int i = r; i < rows; ++i)
            if (!a[i][c].is_zero()) {
                sel = i;
                break;
            }
        if (sel < 0) continue;
        std::swap(a[r], a[sel]);
        Rational inv = a[r][c].inverse();
        for (int j = c; j < ncols; ++j) a[r][j] *= inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rational f = a[i][c];
            for (int j = c; j < ncols; ++j)
                if (!a[r][j].is_zero()) a[i][j].submul(f, a[r][j]);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int rank(QMatrix a, int ncols) { return static_cast<int>(rref(a, ncols).size()); }

std::vector<QVector> kernel(QMatrix a, int ncols) {
    std::vector<int> piv = rref(a, ncols);
    std::vector<char> is_piv(ncols, 0);
    for (int c : piv) is_piv[c] = 1;
    std::vector<QVector> basis;
    for (int f = 0; f < ncols; ++f) {
        if (is_piv[f]) continue;
        QVector v(ncols, Rational(0));
        v[f] = 1;
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -a[r][f];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<QMatrix> inverse(const QMatrix& a) {
    int n = static_cast<int>(a.size());
    QMatrix aug(n, QVector(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) aug[i][j] = a[i][j];
        aug[i][n + i] = 1;
    }
    std::vector<int> piv = rref(aug, 2 * n);
    if (static_cast<int>(piv.size()) < n || piv[n - 1] != n - 1) return std::nullopt;
    QMatrix inv(n, QVector(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
    return inv;
}

std::optional<QVector> solve(const QMatrix& a, const QVector& b, int ncols) {
    QMatrix aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) {
        aug[i].resize(ncols + 1);
        aug[i][ncols] = b[i];
    }
    std::vector<int> piv = rref(aug, ncols + 1);
    if (!piv.empty() && piv.back() == ncols) return std::nullopt;
    QVector x(ncols, Rational(0));
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug[r][ncols];
    return x;
}

}  // namespace germlab
