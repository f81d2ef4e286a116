#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "lcdc/bigint.hpp"
#include "lcdc/field.hpp"

namespace lcdc {

using Row = std::vector<Elem>;
using Mat = std::vector<Row>;

Mat transpose(const Mat& m);
Mat mat_mul(const FieldCtx& F, const Mat& a, const Mat& b);

// Reduced row echelon form; zero rows are dropped. Pivot column indices are
// reported through `pivots` when given.
Mat rref_of(const FieldCtx& F, Mat m, std::vector<int>* pivots = nullptr);

int rank_of(const FieldCtx& F, const Mat& m);

// Basis (as rows) of the right kernel {x : m x^T = 0} of an r x n matrix.
Mat nullspace_of(const FieldCtx& F, const Mat& m, int n_cols);

// Reduces v against a matrix already in RREF with the given pivot columns.
Row reduce_row(const FieldCtx& F, const Mat& rref, const std::vector<int>& pivots, Row v);

bool is_zero_row(const Row& v);

// Coefficients lambda with lambda * basis == target, if target lies in the
// row space. The basis rows need not be independent; one solution is
// returned.
std::optional<Row> coordinates_in_rowspace(const FieldCtx& F, const Mat& basis, const Row& target);

// dim(row space of a  intersect  row space of b)
int intersection_dim(const FieldCtx& F, const Mat& a, const Mat& b);

// Number of k-dimensional subspaces of an n-dimensional space over a field
// with Q elements.
BigInt subspace_count(const BigInt& Q, int n, int k);

// Invokes fn once per k-dimensional subspace of F^n, passing the unique RREF
// basis (k rows, n columns). Enumeration order is deterministic: pivot
// column sets in ascending lexicographic order, then free entries in
// element-index odometer order.
void for_each_subspace(const FieldCtx& F, int n, int k,
                       const std::function<void(const Mat&)>& fn);

// Same enumeration, but fn returns false to stop early. Returns true when
// the enumeration was cut short.
bool for_each_subspace_until(const FieldCtx& F, int n, int k,
                             const std::function<bool(const Mat&)>& fn);

}  // namespace lcdc
