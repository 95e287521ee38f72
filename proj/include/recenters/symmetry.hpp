#pragma once

#include "recenters/nc.hpp"
#include "recenters/scalar.hpp"
#include "recenters/tensor.hpp"

#include <memory>
#include <string>

namespace recenters {

struct BiRank;

struct NotSkewInvertibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class BraidKind { Involutive, Hecke };

std::string kind_name(BraidKind k);

/// Skew-inverse data of a braiding: Psi with Tr_(2) R_12 Psi_23 = P_13 and
/// the trace operators B = Tr_(1) Psi, C = Tr_(2) Psi.
struct SkewData {
    TensorOp psi;  // 2 legs
    TensorOp b;    // 1 leg
    TensorOp c;    // 1 leg
};

/// R_12 R_23 R_12 - R_23 R_12 R_23 on three legs; zero iff R is a braiding.
TensorOp check_braid(const TensorOp& r);

/// Minimal-polynomial residual: R^2 - I (involutive) or (R - qI)(R + q^{-1}I)
/// (Hecke).
TensorOp check_kind(const TensorOp& r, BraidKind kind, const Scalar& q);

/// Solves the component system R^{i a}_{j b} Psi^{b k}_{a l} = d^i_l d^k_j
/// and extracts B, C. Throws NotSkewInvertibleError on a singular system.
SkewData skew_inverse(const TensorOp& r);

/// An involutive or Hecke symmetry that passed the check suite
/// (braid relation, minimal polynomial, genericity of q, skew-invertibility,
/// B.C proportional to I). Immutable afterwards.
class Braiding {
public:
    /// Validates everything; throws std::invalid_argument / NotSkewInvertibleError.
    static Braiding create(TensorOp r, BraidKind kind, Scalar q, std::string name);

    int dim() const { return r_.dim(); }
    BraidKind kind() const { return kind_; }
    const Scalar& q() const { return q_; }
    const TensorOp& r() const { return r_; }
    const TensorOp& r_inverse() const { return r_inv_; }
    const SkewData& skew() const { return *skew_; }
    const std::string& name() const { return name_; }

private:
    Braiding() = default;

    TensorOp r_, r_inv_;
    BraidKind kind_ = BraidKind::Involutive;
    Scalar q_ = Scalar(1);
    std::shared_ptr<const SkewData> skew_;
    std::string name_;
    mutable std::shared_ptr<const BiRank> birank_cache_;

    friend const BiRank& birank_of(const Braiding& b);
};

/// Tr_R A = Tr(C . A) for an N x N scalar matrix.
Scalar r_trace(const Braiding& b, const DenseMat& a);
/// Tr_R A for a matrix over the free algebra.
NCPoly r_trace(const Braiding& b, const NCMatrix& a);

/// Both residuals of Tr_{R(2)} R A_1 R^{-1} = Tr_{R(2)} R^{-1} A_1 R
/// = I_1 Tr_R A with A a matrix of free noncommuting entries.
struct OgievetskyResult {
    NCMatrix residual_a;  // Tr_{R(2)} R A_1 R^{-1} - I Tr_R A
    NCMatrix residual_b;  // Tr_{R(2)} R^{-1} A_1 R - I Tr_R A
    bool zero() const { return residual_a.is_zero() && residual_b.is_zero(); }
    int term_count() const { return residual_a.term_count() + residual_b.term_count(); }
};
OgievetskyResult verify_ogievetsky(const Braiding& b);

// Catalog constructors. Bi-ranks: (N|0), (m|n), (N|0), (m|n) respectively.
Braiding make_flip(int n);
Braiding make_super_flip(int m, int n);
Braiding make_dj(int n, const Scalar& q);
Braiding make_q_super(int m, int n, const Scalar& q);

/// Parses catalog names: "flip:N", "superflip:m|n", "dj:N:q", "qsuper:m|n:q".
Braiding make_by_name(const std::string& name);

/// Loads a custom braiding from the tensor text format and validates it.
Braiding braiding_from_file(const std::string& path, BraidKind kind, const Scalar& q);

}  // namespace recenters
