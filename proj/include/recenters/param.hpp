#pragma once

#include "recenters/scalar.hpp"

#include <cstdint>
#include <set>
#include <vector>

namespace recenters {

/// A registered spectral-parameter point. Points are totally ordered by
/// creation index; that order fixes the normal-ordering direction of the
/// rewrite engine.
struct ParamPoint {
    int id = -1;
    Scalar value;
};

/// Session-local registry of parameter points. Values at distinct ids are
/// pairwise distinct; registering an existing value returns the same point.
class PointRegistry {
public:
    ParamPoint add(const Scalar& value);
    const ParamPoint& at(int id) const { return points_.at(static_cast<size_t>(id)); }
    int size() const { return static_cast<int>(points_.size()); }
    const std::vector<ParamPoint>& all() const { return points_; }

private:
    std::vector<ParamPoint> points_;
};

/// Draws `count` pairwise-distinct positive rationals with numerator and
/// denominator uniform in [2, 10^6], avoiding `forbidden`. Deterministic for
/// a fixed seed; collisions are resampled internally. The points are
/// registered in `reg` in draw order.
std::vector<ParamPoint> sample_params(PointRegistry& reg, int count, std::uint64_t seed,
                                      const std::set<Scalar>& forbidden = {});

/// Same, without registering (plain values).
std::vector<Scalar> sample_values(int count, std::uint64_t seed,
                                  const std::set<Scalar>& forbidden = {});

}  // namespace recenters
