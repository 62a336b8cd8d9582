// linalg.hpp
// Small dense exact linear algebra over the cyclotomic ground field: row
// reduction, rank, kernel bases and span-membership tests.  Sizes are tiny
// (at most a few dozen rows), so plain Gaussian elimination with exact field
// division is entirely adequate.
#pragma once

#include "dwork/cyclotomic.hpp"

#include <vector>

namespace dwork {

using Vec = std::vector<CycElem>;
using Mat = std::vector<Vec>;

// In-place reduced row echelon form; returns the rank.
size_t rref(Mat& m);

size_t rank(Mat m);

// Basis of { x : m * x = 0 }.
std::vector<Vec> kernel_basis(const Mat& m);

// Whether v lies in the row span of m.
bool in_row_span(const Mat& m, const Vec& v);

} // namespace dwork
