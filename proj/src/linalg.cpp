#include "gbk/linalg.hpp"

#include <algorithm>

#include "gbk/errors.hpp"

namespace gbk {

Vec vec_zero(long n) { return Vec(n); }

bool vec_is_zero(const Vec& v) {
    for (const auto& c : v)
        if (!c.is_zero()) return false;
    return true;
}

void vec_axpy(Vec& y, const Cyclotomic& a, const Vec& x) {
    if (a.is_zero()) return;
    for (size_t i = 0; i < y.size(); ++i) {
        if (x[i].is_zero()) continue;
        y[i] += a * x[i];
    }
}

Vec vec_scaled(const Vec& v, const Cyclotomic& a) {
    Vec r(v.size());
    if (a.is_zero()) return r;
    for (size_t i = 0; i < v.size(); ++i)
        if (!v[i].is_zero()) r[i] = a * v[i];
    return r;
}

Vec vec_add(Vec a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] += b[i];
    return a;
}

Vec vec_sub(Vec a, const Vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (!b[i].is_zero()) a[i] -= b[i];
    return a;
}

void svec_normalize(SVec& s) {
    std::sort(s.begin(), s.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    SVec out;
    for (auto& [idx, val] : s) {
        if (!out.empty() && out.back().first == idx)
            out.back().second += val;
        else
            out.emplace_back(idx, val);
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const auto& p) { return p.second.is_zero(); }),
              out.end());
    s = std::move(out);
}

SVec svec_from_dense(const Vec& v) {
    SVec s;
    for (long i = 0; i < (long)v.size(); ++i)
        if (!v[i].is_zero()) s.emplace_back(i, v[i]);
    return s;
}

Vec svec_to_dense(const SVec& s, long n) {
    Vec v(n);
    for (const auto& [idx, val] : s) v[idx] = val;
    return v;
}

Mat mat_identity(long n) {
    Mat m(n, Vec(n));
    for (long i = 0; i < n; ++i) m[i][i] = Cyclotomic(1);
    return m;
}

Mat mat_zero(long rows, long cols) { return Mat(rows, Vec(cols)); }

Mat mat_mul(const Mat& a, const Mat& b) {
    long n = (long)a.size();
    long k = (long)b.size();
    long m = k ? (long)b[0].size() : 0;
    Mat r(n, Vec(m));
    for (long i = 0; i < n; ++i)
        for (long l = 0; l < k; ++l) {
            if (a[i][l].is_zero()) continue;
            for (long j = 0; j < m; ++j) {
                if (b[l][j].is_zero()) continue;
                r[i][j] += a[i][l] * b[l][j];
            }
        }
    return r;
}

Vec mat_apply(const Mat& a, const Vec& x) {
    Vec r(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < x.size(); ++j) {
            if (a[i][j].is_zero() || x[j].is_zero()) continue;
            r[i] += a[i][j] * x[j];
        }
    return r;
}

Mat mat_transpose(const Mat& a) {
    long n = (long)a.size();
    long m = n ? (long)a[0].size() : 0;
    Mat r(m, Vec(n));
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < m; ++j) r[j][i] = a[i][j];
    return r;
}

bool mat_equal(const Mat& a, const Mat& b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != b[i].size()) return false;
        for (size_t j = 0; j < a[i].size(); ++j)
            if (a[i][j] != b[i][j]) return false;
    }
    return true;
}

RowSpan::RowSpan(long ncols) : ncols_(ncols) {
    if (ncols < 0) throw InputError("RowSpan needs a nonnegative column count");
}

std::vector<long> RowSpan::non_pivots() const {
    std::vector<long> out;
    size_t p = 0;
    for (long j = 0; j < ncols_; ++j) {
        if (p < pivots_.size() && pivots_[p] == j)
            ++p;
        else
            out.push_back(j);
    }
    return out;
}

Vec RowSpan::reduce(Vec v) const {
    if ((long)v.size() != ncols_)
        throw InputError("vector length does not match the span's column count");
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic& c = v[pivots_[r]];
        if (c.is_zero()) continue;
        Cyclotomic f = c;
        vec_axpy(v, -f, rows_[r]);
        v[pivots_[r]] = Cyclotomic(0);
    }
    return v;
}

bool RowSpan::contains(const Vec& v) const { return vec_is_zero(reduce(v)); }

bool RowSpan::add(Vec v) {
    v = reduce(std::move(v));
    long piv = -1;
    for (long j = 0; j < ncols_; ++j)
        if (!v[j].is_zero()) { piv = j; break; }
    if (piv < 0) return false;
    Cyclotomic lead = v[piv];
    for (auto& c : v)
        if (!c.is_zero()) c = c / lead;
    v[piv] = Cyclotomic(1);
    // Clear the new pivot column in the existing rows, then keep rows ordered
    // by pivot column.
    for (size_t r = 0; r < rows_.size(); ++r) {
        const Cyclotomic& c = rows_[r][piv];
        if (c.is_zero()) continue;
        Cyclotomic f = c;
        vec_axpy(rows_[r], -f, v);
        rows_[r][piv] = Cyclotomic(0);
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), piv);
    size_t at = pos - pivots_.begin();
    pivots_.insert(pos, piv);
    rows_.insert(rows_.begin() + at, std::move(v));
    return true;
}

void RowSpan::add_all(const std::vector<Vec>& vs) {
    for (const auto& v : vs) add(v);
}

bool RowSpan::same_span(const RowSpan& o) const {
    if (ncols_ != o.ncols_ || dim() != o.dim()) return false;
    for (long i = 0; i < dim(); ++i) {
        if (pivots_[i] != o.pivots_[i]) return false;
        for (long j = 0; j < ncols_; ++j)
            if (rows_[i][j] != o.rows_[i][j]) return false;
    }
    return true;
}

long mat_rank(const Mat& a) {
    if (a.empty()) return 0;
    RowSpan s((long)a[0].size());
    for (const auto& row : a) s.add(row);
    return s.dim();
}

std::vector<Vec> kernel_basis(const Mat& a) {
    if (a.empty()) return {};
    long n = (long)a[0].size();
    RowSpan s(n);
    for (const auto& row : a) s.add(row);
    const auto& rows = s.rows();
    const auto& piv = s.pivots();
    std::vector<Vec> out;
    for (long j : s.non_pivots()) {
        Vec v(n);
        v[j] = Cyclotomic(1);
        for (size_t r = 0; r < rows.size(); ++r)
            if (!rows[r][j].is_zero()) v[piv[r]] = -rows[r][j];
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<Vec> solve(const Mat& a, const Vec& b) {
    long m = (long)a.size();
    if ((long)b.size() != m) throw InputError("solve: dimension mismatch");
    long n = m ? (long)a[0].size() : 0;
    // Reduce the augmented matrix [a | b].
    RowSpan s(n + 1);
    for (long i = 0; i < m; ++i) {
        Vec row = a[i];
        row.push_back(b[i]);
        s.add(std::move(row));
    }
    Vec x(n);
    for (long r = 0; r < s.dim(); ++r) {
        long p = s.pivots()[r];
        if (p == n) return std::nullopt;
        x[p] = s.rows()[r][n];
    }
    return x;
}

std::optional<Mat> mat_inverse(const Mat& a) {
    long n = (long)a.size();
    for (const auto& row : a)
        if ((long)row.size() != n) throw InputError("mat_inverse: matrix is not square");
    RowSpan s(2 * n);
    for (long i = 0; i < n; ++i) {
        Vec row = a[i];
        row.resize(2 * n);
        row[n + i] = Cyclotomic(1);
        s.add(std::move(row));
    }
    if (s.dim() != n) return std::nullopt;
    for (long r = 0; r < n; ++r)
        if (s.pivots()[r] != r) return std::nullopt;
    Mat inv(n, Vec(n));
    for (long r = 0; r < n; ++r)
        for (long j = 0; j < n; ++j) inv[r][j] = s.rows()[r][n + j];
    return inv;
}

long intersection_dim(const RowSpan& u, const RowSpan& w) {
    if (u.ncols() != w.ncols())
        throw InputError("intersection_dim: column counts differ");
    RowSpan sum(u.ncols());
    sum.add_all(u.rows());
    sum.add_all(w.rows());
    return u.dim() + w.dim() - sum.dim();
}

std::optional<Vec> rowspan_coords(const RowSpan& s, const Vec& v) {
    if ((long)v.size() != s.ncols())
        throw InputError("rowspan_coords: vector length does not match");
    // Pivot columns are cleared in all other rows and normalized to 1, so the
    // coefficient of row k is just the pivot-column entry of v.
    Vec c(s.dim());
    for (long k = 0; k < s.dim(); ++k) c[k] = v[s.pivots()[k]];
    Vec rebuilt(s.ncols());
    for (long k = 0; k < s.dim(); ++k)
        if (!c[k].is_zero()) vec_axpy(rebuilt, c[k], s.rows()[k]);
    if (rebuilt != v) return std::nullopt;
    return c;
}

} // namespace gbk
