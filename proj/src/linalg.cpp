#include "dwork/linalg.hpp"

#include <stdexcept>

namespace dwork {

size_t rref(Mat& m) {
    if (m.empty()) return 0;
    const size_t rows = m.size(), cols = m[0].size();
    size_t pivot_row = 0;
    for (size_t col = 0; col < cols && pivot_row < rows; ++col) {
        size_t sel = pivot_row;
        while (sel < rows && m[sel][col].is_zero()) ++sel;
        if (sel == rows) continue;
        std::swap(m[sel], m[pivot_row]);
        CycElem inv = m[pivot_row][col].inverse();
        for (size_t j = col; j < cols; ++j) m[pivot_row][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == pivot_row || m[i][col].is_zero()) continue;
            CycElem factor = m[i][col];
            for (size_t j = col; j < cols; ++j) m[i][j] -= factor * m[pivot_row][j];
        }
        ++pivot_row;
    }
    return pivot_row;
}

size_t rank(Mat m) { return rref(m); }

std::vector<Vec> kernel_basis(const Mat& m) {
    if (m.empty()) return {};
    const size_t cols = m[0].size();
    Mat r = m;
    size_t rk = rref(r);
    // Locate the pivot column of each nonzero row.
    std::vector<long> pivot_of_col(cols, -1);
    for (size_t i = 0; i < rk; ++i) {
        size_t col = 0;
        while (col < cols && r[i][col].is_zero()) ++col;
        if (col == cols) throw std::logic_error("rref produced a zero pivot row");
        pivot_of_col[col] = static_cast<long>(i);
    }
    std::vector<Vec> basis;
    for (size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_of_col[free_col] >= 0) continue;
        Vec x(cols, CycElem(0));
        x[free_col] = CycElem(1);
        for (size_t col = 0; col < cols; ++col)
            if (pivot_of_col[col] >= 0)
                x[col] = -r[static_cast<size_t>(pivot_of_col[col])][free_col];
        basis.push_back(std::move(x));
    }
    return basis;
}

bool in_row_span(const Mat& m, const Vec& v) {
    size_t base = rank(m);
    Mat ext = m;
    ext.push_back(v);
    return rank(std::move(ext)) == base;
}

} // namespace dwork
