#pragma once

#include "recenters/linalg.hpp"
#include "recenters/scalar.hpp"

#include <iosfwd>
#include <string>

namespace recenters {

/// Dense exact operator on V^{x legs}, dim V = N.
///
/// Entry M[(i1..ik),(j1..jk)] is the coefficient of e_{i1}x..xe_{ik} in
/// M(e_{j1}x..xe_{jk}). Composite indices are big-endian: the first leg is
/// most significant, idx = ((i1-1)N + (i2-1))N + ... with 1-based leg indices
/// (0-based composite index). All file formats use this convention.
class TensorOp {
public:
    TensorOp() = default;
    TensorOp(int legs, int dim);
    TensorOp(int legs, int dim, DenseMat m);

    static TensorOp identity(int legs, int dim);
    /// The flip P(x o y) = y o x (2 legs).
    static TensorOp flip(int dim);

    int legs() const { return legs_; }
    int dim() const { return dim_; }
    /// Matrix size N^legs.
    int size() const { return m_.rows(); }

    Scalar& at(int r, int c) { return m_.at(r, c); }
    const Scalar& at(int r, int c) const { return m_.at(r, c); }
    const DenseMat& mat() const { return m_; }

    TensorOp operator*(const TensorOp& o) const;
    TensorOp operator+(const TensorOp& o) const;
    TensorOp operator-(const TensorOp& o) const;
    TensorOp scaled(const Scalar& s) const;
    /// this + s*I.
    TensorOp plus_scalar_identity(const Scalar& s) const;
    TensorOp inverse() const;

    bool operator==(const TensorOp& o) const;
    bool is_zero() const { return m_.is_zero(); }
    int nonzero_count() const { return m_.nonzero_count(); }

    Scalar trace() const;

private:
    int legs_ = 0, dim_ = 0;
    DenseMat m_;
};

/// Places a 2-leg operator at legs (pos, pos+1) of `total` legs, identity
/// elsewhere. 1 <= pos <= total-1.
TensorOp embed_leg(const TensorOp& m, int pos, int total);

/// Tr_{(leg)}((W at leg) . M) for a 1-leg weight W; with W = I this is the
/// plain partial trace. Result acts on the remaining legs.
TensorOp partial_trace_weighted(const TensorOp& m, int leg, const TensorOp& w);
TensorOp partial_trace(const TensorOp& m, int leg);

/// Transposes the index pair of one leg of a 2-leg operator. Involutive.
TensorOp partial_transpose(const TensorOp& m, int leg);

/// Text format: line "N <dim> LEGS <k>", then N^{2k} scalars row-major.
TensorOp read_tensor_text(std::istream& in);
TensorOp read_tensor_file(const std::string& path);
void write_tensor_text(std::ostream& out, const TensorOp& m);

}  // namespace recenters
