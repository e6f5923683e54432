#ifndef VLAB_MATRIX_HPP
#define VLAB_MATRIX_HPP

#include <optional>
#include <vector>

#include "vlab/field.hpp"
#include "vlab/unipoly.hpp"

namespace vlab {

// Dense matrix over a runtime field; exact arithmetic throughout.
class Mat {
public:
    Mat(FieldPtr field, size_t rows, size_t cols);

    static Mat identity(FieldPtr field, size_t n);
    static Mat from_rows(FieldPtr field, const std::vector<std::vector<FieldElem>>& rows);

    const FieldPtr& field() const { return field_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    FieldElem& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
    const FieldElem& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }

    Mat operator*(const Mat& o) const;
    Mat operator+(const Mat& o) const;
    Mat operator-(const Mat& o) const;
    Mat scale(const FieldElem& c) const;
    Mat transpose() const;
    std::vector<FieldElem> apply(const std::vector<FieldElem>& v) const; // M v

    // Row-reduce in place to reduced row echelon form; returns pivot columns.
    std::vector<size_t> rref();
    size_t rank() const;
    // Basis of the right kernel {v : Mv = 0}.
    std::vector<std::vector<FieldElem>> kernel() const;
    std::optional<Mat> inverse() const;
    // One solution of Mx = b, if consistent.
    std::optional<std::vector<FieldElem>> solve(const std::vector<FieldElem>& b) const;
    FieldElem det() const;
    // det(xI - M), monic; computed by evaluation/interpolation.
    UniPoly charpoly() const;

    Mat map_field(const FieldPtr& target) const; // embed entries

    bool operator==(const Mat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

private:
    FieldPtr field_;
    size_t rows_, cols_;
    std::vector<FieldElem> a_;
};

} // namespace vlab

#endif
