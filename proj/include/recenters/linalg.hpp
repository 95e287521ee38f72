#pragma once

#include "recenters/scalar.hpp"

#include <stdexcept>
#include <vector>

namespace recenters {

struct SingularMatrixError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Dense matrix over exact rationals. Row-major.
class DenseMat {
public:
    DenseMat() = default;
    DenseMat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols) {}

    static DenseMat identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    Scalar& at(int r, int c) { return a_[static_cast<size_t>(r) * cols_ + c]; }
    const Scalar& at(int r, int c) const { return a_[static_cast<size_t>(r) * cols_ + c]; }

    DenseMat operator*(const DenseMat& o) const;
    DenseMat operator+(const DenseMat& o) const;
    DenseMat operator-(const DenseMat& o) const;
    DenseMat scaled(const Scalar& s) const;
    /// this + s * I
    DenseMat plus_scalar_identity(const Scalar& s) const;

    bool operator==(const DenseMat& o) const { return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_; }

    bool is_zero() const;
    int nonzero_count() const;

    /// Exact inverse; throws SingularMatrixError.
    DenseMat inverse() const;
    /// Solves this * X = rhs; throws SingularMatrixError.
    DenseMat solve(const DenseMat& rhs) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Scalar> a_;
};

}  // namespace recenters
