#include "vlab/matrix.hpp"

#include <algorithm>

namespace vlab {

Mat::Mat(FieldPtr field, size_t rows, size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), a_(rows * cols, field_->zero()) {}

Mat Mat::identity(FieldPtr field, size_t n) {
    Mat m(field, n, n);
    for (size_t i = 0; i < n; ++i) m.at(i, i) = field->one();
    return m;
}

Mat Mat::from_rows(FieldPtr field, const std::vector<std::vector<FieldElem>>& rows) {
    size_t r = rows.size();
    size_t c = r == 0 ? 0 : rows[0].size();
    Mat m(field, r, c);
    for (size_t i = 0; i < r; ++i) {
        if (rows[i].size() != c) fail(ErrorCode::InvalidArgument, "ragged rows");
        for (size_t j = 0; j < c; ++j) m.at(i, j) = rows[i][j];
    }
    return m;
}

Mat Mat::operator*(const Mat& o) const {
    if (cols_ != o.rows_) fail(ErrorCode::InvalidArgument, "matrix shape mismatch");
    Mat r(field_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            const FieldElem& x = at(i, k);
            if (field_->is_zero(x)) continue;
            for (size_t j = 0; j < o.cols_; ++j)
                r.at(i, j) = field_->add(r.at(i, j), field_->mul(x, o.at(k, j)));
        }
    return r;
}

Mat Mat::operator+(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->add(r.a_[i], o.a_[i]);
    return r;
}

Mat Mat::operator-(const Mat& o) const {
    Mat r = *this;
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = field_->sub(r.a_[i], o.a_[i]);
    return r;
}

Mat Mat::scale(const FieldElem& c) const {
    Mat r = *this;
    for (auto& x : r.a_) x = field_->mul(x, c);
    return r;
}

Mat Mat::transpose() const {
    Mat r(field_, cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) r.at(j, i) = at(i, j);
    return r;
}

std::vector<FieldElem> Mat::apply(const std::vector<FieldElem>& v) const {
    if (v.size() != cols_) fail(ErrorCode::InvalidArgument, "vector length mismatch");
    std::vector<FieldElem> r(rows_, field_->zero());
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j)
            r[i] = field_->add(r[i], field_->mul(at(i, j), v[j]));
    return r;
}

std::vector<size_t> Mat::rref() {
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols_ && row < rows_; ++col) {
        size_t sel = rows_;
        for (size_t i = row; i < rows_; ++i)
            if (!field_->is_zero(at(i, col))) { sel = i; break; }
        if (sel == rows_) continue;
        if (sel != row)
            for (size_t j = 0; j < cols_; ++j) std::swap(at(sel, j), at(row, j));
        FieldElem inv = field_->inv(at(row, col));
        for (size_t j = col; j < cols_; ++j) at(row, j) = field_->mul(at(row, j), inv);
        for (size_t i = 0; i < rows_; ++i) {
            if (i == row || field_->is_zero(at(i, col))) continue;
            FieldElem f = at(i, col);
            for (size_t j = col; j < cols_; ++j)
                at(i, j) = field_->sub(at(i, j), field_->mul(f, at(row, j)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

size_t Mat::rank() const {
    Mat m = *this;
    return m.rref().size();
}

std::vector<std::vector<FieldElem>> Mat::kernel() const {
    Mat m = *this;
    std::vector<size_t> pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (size_t p : pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldElem>> basis;
    for (size_t freecol = 0; freecol < cols_; ++freecol) {
        if (is_pivot[freecol]) continue;
        std::vector<FieldElem> v(cols_, field_->zero());
        v[freecol] = field_->one();
        for (size_t r = 0; r < pivots.size(); ++r)
            v[pivots[r]] = field_->neg(m.at(r, freecol));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> Mat::inverse() const {
    if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "inverse of non-square matrix");
    Mat aug(field_, rows_, 2 * cols_);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = field_->one();
    }
    std::vector<size_t> piv = aug.rref();
    if (piv.size() != rows_ || piv.back() >= cols_) return std::nullopt;
    Mat inv(field_, rows_, cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

std::optional<std::vector<FieldElem>> Mat::solve(const std::vector<FieldElem>& b) const {
    if (b.size() != rows_) fail(ErrorCode::InvalidArgument, "rhs length mismatch");
    Mat aug(field_, rows_, cols_ + 1);
    for (size_t i = 0; i < rows_; ++i) {
        for (size_t j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    std::vector<size_t> piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_) return std::nullopt; // inconsistent
    std::vector<FieldElem> x(cols_, field_->zero());
    for (size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug.at(r, cols_);
    return x;
}

FieldElem Mat::det() const {
    if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "determinant of non-square matrix");
    Mat m = *this;
    FieldElem d = field_->one();
    for (size_t col = 0; col < cols_; ++col) {
        size_t sel = rows_;
        for (size_t i = col; i < rows_; ++i)
            if (!field_->is_zero(m.at(i, col))) { sel = i; break; }
        if (sel == rows_) return field_->zero();
        if (sel != col) {
            for (size_t j = 0; j < cols_; ++j) std::swap(m.at(sel, j), m.at(col, j));
            d = field_->neg(d);
        }
        d = field_->mul(d, m.at(col, col));
        FieldElem inv = field_->inv(m.at(col, col));
        for (size_t i = col + 1; i < rows_; ++i) {
            if (field_->is_zero(m.at(i, col))) continue;
            FieldElem f = field_->mul(m.at(i, col), inv);
            for (size_t j = col; j < cols_; ++j)
                m.at(i, j) = field_->sub(m.at(i, j), field_->mul(f, m.at(col, j)));
        }
    }
    return d;
}

UniPoly Mat::charpoly() const {
    if (rows_ != cols_) fail(ErrorCode::InvalidArgument, "charpoly of non-square matrix");
    size_t n = rows_;
    // evaluate det(xI - M) at n+1 sample points, then Lagrange-interpolate
    std::vector<FieldElem> xs, ys;
    for (size_t i = 0; i <= n; ++i) {
        FieldElem x = field_->from_int((long long)i);
        Mat m = *this;
        for (size_t j = 0; j < n; ++j) {
            for (size_t k = 0; k < n; ++k) m.at(j, k) = field_->neg(m.at(j, k));
            m.at(j, j) = field_->add(m.at(j, j), x);
        }
        xs.push_back(x);
        ys.push_back(m.det());
    }
    UniPoly acc(field_);
    for (size_t i = 0; i <= n; ++i) {
        UniPoly li = UniPoly::constant(field_, field_->one());
        FieldElem denom = field_->one();
        for (size_t j = 0; j <= n; ++j) {
            if (j == i) continue;
            li = li * UniPoly(field_, {field_->neg(xs[j]), field_->one()});
            denom = field_->mul(denom, field_->sub(xs[i], xs[j]));
        }
        acc = acc + li.scale(field_->div(ys[i], denom));
    }
    return acc;
}

Mat Mat::map_field(const FieldPtr& target) const {
    Mat r(target, rows_, cols_);
    for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = target->embed(*field_, a_[i]);
    return r;
}

} // namespace vlab
