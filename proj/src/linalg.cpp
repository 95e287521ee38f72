#include "recenters/linalg.hpp"

namespace recenters {

DenseMat DenseMat::identity(int n) {
    DenseMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = Scalar(1);
    return m;
}

DenseMat DenseMat::operator*(const DenseMat& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("DenseMat: dimension mismatch in product");
    DenseMat out(rows_, o.cols_);
    for (int i = 0; i < rows_; ++i)
        for (int t = 0; t < cols_; ++t) {
            const Scalar& x = at(i, t);
            if (x.is_zero()) continue;
            for (int j = 0; j < o.cols_; ++j) {
                const Scalar& y = o.at(t, j);
                if (!y.is_zero()) out.at(i, j) += x * y;
            }
        }
    return out;
}

DenseMat DenseMat::operator+(const DenseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("DenseMat: shape mismatch");
    DenseMat out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] + o.a_[k];
    return out;
}

DenseMat DenseMat::operator-(const DenseMat& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("DenseMat: shape mismatch");
    DenseMat out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] - o.a_[k];
    return out;
}

DenseMat DenseMat::scaled(const Scalar& s) const {
    DenseMat out(rows_, cols_);
    for (size_t k = 0; k < a_.size(); ++k) out.a_[k] = a_[k] * s;
    return out;
}

DenseMat DenseMat::plus_scalar_identity(const Scalar& s) const {
    if (rows_ != cols_) throw std::invalid_argument("DenseMat: not square");
    DenseMat out = *this;
    for (int i = 0; i < rows_; ++i) out.at(i, i) += s;
    return out;
}

bool DenseMat::is_zero() const {
    for (const auto& x : a_)
        if (!x.is_zero()) return false;
    return true;
}

int DenseMat::nonzero_count() const {
    int n = 0;
    for (const auto& x : a_)
        if (!x.is_zero()) ++n;
    return n;
}

DenseMat DenseMat::solve(const DenseMat& rhs) const {
    if (rows_ != cols_) throw std::invalid_argument("DenseMat::solve: not square");
    if (rhs.rows_ != rows_) throw std::invalid_argument("DenseMat::solve: rhs shape mismatch");
    const int n = rows_;
    const int m = rhs.cols_;
    // Augmented Gauss-Jordan with exact pivots.
    DenseMat w = *this;
    DenseMat x = rhs;
    for (int c = 0; c < n; ++c) {
        int p = -1;
        for (int r = c; r < n; ++r)
            if (!w.at(r, c).is_zero()) { p = r; break; }
        if (p < 0) throw SingularMatrixError("DenseMat::solve: singular matrix");
        if (p != c) {
            for (int j = 0; j < n; ++j) std::swap(w.at(p, j), w.at(c, j));
            for (int j = 0; j < m; ++j) std::swap(x.at(p, j), x.at(c, j));
        }
        const Scalar piv = w.at(c, c).inverse();
        for (int j = c; j < n; ++j) w.at(c, j) *= piv;
        for (int j = 0; j < m; ++j) x.at(c, j) *= piv;
        for (int r = 0; r < n; ++r) {
            if (r == c || w.at(r, c).is_zero()) continue;
            const Scalar f = w.at(r, c);
            for (int j = c; j < n; ++j) w.at(r, j) -= f * w.at(c, j);
            for (int j = 0; j < m; ++j) x.at(r, j) -= f * x.at(c, j);
        }
    }
    return x;
}

DenseMat DenseMat::inverse() const { return solve(identity(rows_)); }

}  // namespace recenters
