#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "gbk/cyclotomic.hpp"

namespace gbk {

// Dense coordinate vector over the cyclotomic field.
using Vec = std::vector<Cyclotomic>;

// Sparse vector: (index, nonzero value) pairs with strictly increasing indices.
using SVec = std::vector<std::pair<long, Cyclotomic>>;

// Dense row-major matrix. All rows must share one length.
using Mat = std::vector<Vec>;

Vec vec_zero(long n);
bool vec_is_zero(const Vec& v);
// y += a * x
void vec_axpy(Vec& y, const Cyclotomic& a, const Vec& x);
Vec vec_scaled(const Vec& v, const Cyclotomic& a);
Vec vec_add(Vec a, const Vec& b);
Vec vec_sub(Vec a, const Vec& b);

// Sorts by index, merges duplicates, drops zeros.
void svec_normalize(SVec& s);
SVec svec_from_dense(const Vec& v);
Vec svec_to_dense(const SVec& s, long n);

Mat mat_identity(long n);
Mat mat_zero(long rows, long cols);
Mat mat_mul(const Mat& a, const Mat& b);
// Matrix times column vector.
Vec mat_apply(const Mat& a, const Vec& x);
Mat mat_transpose(const Mat& a);
bool mat_equal(const Mat& a, const Mat& b);

// Row-reduced span of vectors with a fixed column count. Rows are kept in
// canonical reduced row echelon form (pivots 1, pivot columns clear above and
// below, pivot columns strictly increasing), so two RowSpans describe the same
// subspace exactly when their rows coincide.
class RowSpan {
public:
    explicit RowSpan(long ncols);

    long ncols() const { return ncols_; }
    long dim() const { return (long)rows_.size(); }
    const std::vector<Vec>& rows() const { return rows_; }
    const std::vector<long>& pivots() const { return pivots_; }
    std::vector<long> non_pivots() const;

    // Residual of v after reduction by the current rows.
    Vec reduce(Vec v) const;
    bool contains(const Vec& v) const;
    // Inserts v; returns true when the dimension grew.
    bool add(Vec v);
    void add_all(const std::vector<Vec>& vs);
    bool same_span(const RowSpan& o) const;

private:
    long ncols_;
    std::vector<Vec> rows_;
    std::vector<long> pivots_;
};

long mat_rank(const Mat& a);
// Basis of { x : a x = 0 }.
std::vector<Vec> kernel_basis(const Mat& a);
// One solution of a x = b, if any.
std::optional<Vec> solve(const Mat& a, const Vec& b);
std::optional<Mat> mat_inverse(const Mat& a);
long intersection_dim(const RowSpan& u, const RowSpan& w);
// Coefficients of v over the rows of s, or nullopt when v lies outside.
std::optional<Vec> rowspan_coords(const RowSpan& s, const Vec& v);

} // namespace gbk
