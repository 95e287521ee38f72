#pragma once

#include "recenters/linalg.hpp"
#include "recenters/param.hpp"
#include "recenters/scalar.hpp"
#include "recenters/tensor.hpp"

#include <map>
#include <string>
#include <utility>

namespace recenters {

/// Parameters hit a structurally bad locus (singular exchange system);
/// resampling the points usually clears it.
struct SpecialParamsError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingRuleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A letter is one generator l_i^j(p): point id, row, col packed into a
/// char32_t as (pid << 8) | (row << 4) | col with 1-based row/col < 16.
/// Words compare lexicographically, point id most significant.
using Letter = char32_t;
using Word = std::u32string;

inline Letter make_letter(int pid, int row, int col) {
    if (row < 0 || row >= 15 || col < 0 || col >= 15 || pid < 0 || pid >= (1 << 24))
        throw std::invalid_argument("generator letter out of range (dim < 15, point id < 2^24)");
    return static_cast<Letter>((static_cast<unsigned>(pid) << 8) |
                               (static_cast<unsigned>(row + 1) << 4) |
                               static_cast<unsigned>(col + 1));
}
inline int letter_point(Letter l) { return static_cast<int>(static_cast<unsigned>(l) >> 8); }
inline int letter_row(Letter l) { return static_cast<int>((static_cast<unsigned>(l) >> 4) & 0xF) - 1; }
inline int letter_col(Letter l) { return static_cast<int>(static_cast<unsigned>(l) & 0xF) - 1; }

/// Element of the free algebra on generators l_i^j(p) over exact rationals.
/// Zero coefficients are never stored.
class NCPoly {
public:
    NCPoly() = default;

    static NCPoly constant(const Scalar& c);
    static NCPoly generator(int pid, int row, int col);
    static NCPoly monomial(Word w, const Scalar& c);

    bool is_zero() const { return t_.empty(); }
    int term_count() const { return static_cast<int>(t_.size()); }
    int degree() const;
    const std::map<Word, Scalar>& terms() const { return t_; }

    void add_term(const Word& w, const Scalar& c);

    NCPoly operator+(const NCPoly& o) const;
    NCPoly operator-(const NCPoly& o) const;
    NCPoly operator*(const NCPoly& o) const;
    NCPoly scaled(const Scalar& s) const;
    NCPoly operator-() const { return scaled(Scalar(-1)); }

    bool operator==(const NCPoly& o) const { return t_ == o.t_; }

    std::string str() const;

private:
    std::map<Word, Scalar> t_;
};

/// Matrix with NCPoly entries.
class NCMatrix {
public:
    NCMatrix() = default;
    NCMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}

    /// The generating matrix L(p) = ||l_i^j(p)||, N x N.
    static NCMatrix generators(int n, int pid);
    static NCMatrix from_scalar(const TensorOp& m);
    static NCMatrix from_scalar(const DenseMat& m);
    static NCMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    NCPoly& at(int r, int c) { return e_[static_cast<size_t>(r) * cols_ + c]; }
    const NCPoly& at(int r, int c) const { return e_[static_cast<size_t>(r) * cols_ + c]; }

    NCMatrix operator*(const NCMatrix& o) const;
    NCMatrix operator+(const NCMatrix& o) const;
    NCMatrix operator-(const NCMatrix& o) const;
    /// Entrywise left/right multiplication by a fixed polynomial.
    NCMatrix left_mul(const NCPoly& p) const;
    NCMatrix right_mul(const NCPoly& p) const;

    bool is_zero() const;
    int term_count() const;
    bool operator==(const NCMatrix& o) const;

    /// L (x) I_n: embeds an N x N matrix as leg 1 of an N n x N n matrix.
    NCMatrix leg1(int n) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<NCPoly> e_;
};

/// Rewrite rule for an ordered point pair: expresses each monomial
/// l_a^b(hi) l_c^d(lo) as a combination of monomials l_e^f(lo) l_g^h(hi).
/// Row/column index is lexicographic in (a,b,c,d), 0-based:
/// idx = ((a N + b) N + c) N + d.
struct RewriteRule {
    int lo_pid = -1;
    int hi_pid = -1;
    int dim = 0;
    DenseMat x;        // m(hi,lo) = x . m(lo,hi)
    DenseMat reverse;  // x^{-1}
};

using RuleSet = std::map<std::pair<int, int>, RewriteRule>;

/// The four factors R + g_k I of one defining-relation instance
/// (A1 L1(lo) A2 L1(hi) = L1(hi) A3 L1(lo) A4).
struct ExchangeFactors {
    TensorOp a1, a2, a3, a4;
};

/// Builds the exchange rule from a relation instance. Throws
/// SpecialParamsError if the hi-before-lo coefficient operator is singular.
/// The rule is validated on construction: substituting it back into the
/// relation instance must yield zero.
RewriteRule build_exchange_rule(const ExchangeFactors& f, const ParamPoint& lo, const ParamPoint& hi);

enum class ReductionStrategy { LeftmostFirst, RightmostFirst };

/// Sorts every word to ascending point-id order by adjacent exchanges.
/// Letters at equal points are never reordered among themselves. Throws
/// MissingRuleError if an out-of-order pair has no rule.
NCPoly normal_order(const NCPoly& p, const RuleSet& rules,
                    ReductionStrategy strategy = ReductionStrategy::LeftmostFirst);
NCMatrix normal_order(const NCMatrix& m, const RuleSet& rules,
                      ReductionStrategy strategy = ReductionStrategy::LeftmostFirst);

/// A . M1 . B . M2 with M, M2 embedded on leg 1; letters keep left-to-right
/// product order.
NCMatrix nc_sandwich(const TensorOp& a, const NCMatrix& m, const TensorOp& b, const NCMatrix& m2);

/// Tr(C . A) for an N x N matrix A over the free algebra.
NCPoly nc_r_trace(const TensorOp& c_op, const NCMatrix& a);

/// Weighted partial trace over leg 2 of an N^2 x N^2 matrix over the free
/// algebra: out^i_j = sum_{s,d} W^s_d M^{(i,d)}_{(j,s)}.
NCMatrix nc_partial_trace2_weighted(const TensorOp& w, const NCMatrix& m);

/// The rule matrix as a 2-leg operator on (V x V), dumpable in the tensor
/// text format.
TensorOp rule_as_tensor(const RewriteRule& rule);

}  // namespace recenters
