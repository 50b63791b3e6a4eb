#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace irg {

// Closed interval with half-integer endpoints, stored as doubled integers so
// that every comparison in the decision path is exact. The real endpoints are
// lo2/2 and hi2/2.
struct HalfIntInterval {
    std::int64_t lo2 = 0;
    std::int64_t hi2 = 0;

    bool contains2(std::int64_t x2) const { return lo2 <= x2 && x2 <= hi2; }
    bool is_point() const { return lo2 == hi2; }

    friend bool operator==(const HalfIntInterval&, const HalfIntInterval&) = default;
};

inline bool intervals_intersect(const HalfIntInterval& a, const HalfIntInterval& b) {
    return std::max(a.lo2, b.lo2) <= std::min(a.hi2, b.hi2);
}

// Renders a doubled endpoint as "7" or "7.5".
std::string half_to_string(std::int64_t x2);

// One closed interval per vertex, indexed by vertex id.
struct IntervalModel {
    std::vector<HalfIntInterval> intervals;

    int size() const { return static_cast<int>(intervals.size()); }

    friend bool operator==(const IntervalModel&, const IntervalModel&) = default;
};

}  // namespace irg
