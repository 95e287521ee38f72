#include "recenters/param.hpp"

#include <random>
#include <stdexcept>

namespace recenters {

ParamPoint PointRegistry::add(const Scalar& value) {
    for (const auto& p : points_)
        if (p.value == value) return p;
    ParamPoint p{static_cast<int>(points_.size()), value};
    points_.push_back(p);
    return p;
}

std::vector<Scalar> sample_values(int count, std::uint64_t seed, const std::set<Scalar>& forbidden) {
    if (count < 1) throw std::invalid_argument("sample_values: count must be >= 1");
    std::mt19937_64 rng(seed);
    auto draw_part = [&rng]() -> long {
        return 2 + static_cast<long>(rng() % 999999ULL);  // [2, 10^6]
    };
    std::vector<Scalar> out;
    out.reserve(static_cast<size_t>(count));
    while (static_cast<int>(out.size()) < count) {
        Scalar cand(draw_part(), draw_part());
        if (forbidden.count(cand)) continue;
        bool dup = false;
        for (const auto& s : out) dup = dup || s == cand;
        if (!dup) out.push_back(cand);
    }
    return out;
}

std::vector<ParamPoint> sample_params(PointRegistry& reg, int count, std::uint64_t seed,
                                      const std::set<Scalar>& forbidden) {
    std::set<Scalar> avoid = forbidden;
    for (const auto& p : reg.all()) avoid.insert(p.value);
    auto vals = sample_values(count, seed, avoid);
    std::vector<ParamPoint> out;
    out.reserve(vals.size());
    for (const auto& v : vals) out.push_back(reg.add(v));
    return out;
}

}  // namespace recenters
