#pragma once

#include "recenters/symmetry.hpp"

#include <vector>

namespace recenters {

/// Bi-rank (m|n) of a symmetry: the Poincare-Hilbert series of the
/// R-skew-symmetric algebra is a coprime rational function with numerator
/// degree m and denominator degree n.
struct BiRank {
    int m = 0;
    int n = 0;
    std::vector<long> dims;  // dim of the degree-k component, k = 0..kmax
    int kmax = 0;
};

/// Dimensions of the homogeneous components of Lambda_R(V) = T(V)/<Im(q^-1 I + R)>
/// for k = 0..kmax: dims[k] = N^k - rank of the degree-k ideal component.
/// force_general_rank bypasses the two-nonzero union-find fast path (used to
/// cross-check the two rank routes against each other).
std::vector<long> lambda_dims(const Braiding& b, int kmax, bool force_general_rank = false);

enum class FitStatus { Confirmed, Inconclusive, Inconsistent };

struct SeriesFit {
    FitStatus status = FitStatus::Inconsistent;
    int m = -1;
    int n = -1;
    int surplus = 0;  // coefficients beyond the m+n+1 needed to determine the fit
};

/// Finds the smallest (by total degree, then by denominator degree) coprime
/// rational function of exact degrees (m, n) matching all supplied
/// coefficients. Confirmed needs >= 2 surplus coefficients; a fit with fewer
/// is Inconclusive ("raise kmax"); no fit at all is Inconsistent.
SeriesFit birank_from_series(const std::vector<long>& dims);

/// Adaptive bi-rank: kmax starts at 4 and grows to 8 until the series fit is
/// confirmed. Cached on the braiding. Throws std::runtime_error if still not
/// confirmed at kmax = 8.
const BiRank& birank_of(const Braiding& b);

/// alpha = Tr_R I = q^{n-m} (m-n)_q; equals m - n for involutive symmetries.
Scalar braiding_alpha(const Braiding& b);

}  // namespace recenters
