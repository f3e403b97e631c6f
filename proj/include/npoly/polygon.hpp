#ifndef NPOLY_POLYGON_HPP
#define NPOLY_POLYGON_HPP

#include <utility>
#include <vector>

#include "npoly/rational.hpp"

namespace npoly {

// Convex polygon with unit horizontal segments, stored as its sorted slope
// multiset. An entry (s, m) is a run of m consecutive segments of slope s;
// runs are strictly increasing in slope, so the polygon is the graph of a
// convex piecewise-linear function starting at the origin. The empty polygon
// (length 0) is the identity for juxtaposition.
class ConvexPolygon {
public:
    using Run = std::pair<Rat, long>;

    ConvexPolygon() = default;

    // Sorts and merges; every multiset of slopes yields a valid polygon.
    static ConvexPolygon from_slopes(std::vector<Rat> slopes);
    // Entries need not be sorted; multiplicities must be >= 1.
    static ConvexPolygon from_runs(std::vector<Run> runs);

    const std::vector<Run>& runs() const { return runs_; }
    long length() const;
    bool empty() const { return runs_.empty(); }

    // Expanded slope list, smallest first, one entry per unit segment.
    std::vector<Rat> slopes() const;

    // Points (k, sum of the k smallest slopes) for k = 0..length.
    std::vector<std::pair<long, Rat>> vertices() const;

    Rat sum_of_slopes() const;

    bool operator==(const ConvexPolygon& other) const { return runs_ == other.runs_; }
    bool operator!=(const ConvexPolygon& other) const { return !(*this == other); }

private:
    std::vector<Run> runs_;
};

// Slope multiset {s + s'}; length multiplies. Empty operand gives empty result.
ConvexPolygon product(const ConvexPolygon& a, const ConvexPolygon& b);

// Slope multiset union; length adds.
ConvexPolygon juxtapose(const ConvexPolygon& a, const ConvexPolygon& b);

// Componentwise mean of the sorted slope sequences. All operands must have
// equal length; throws MathError("unequal polygon lengths") otherwise.
ConvexPolygon average(const std::vector<ConvexPolygon>& polys);

// True iff a lies above b at every integer abscissa and the endpoints agree.
// Requires equal lengths.
bool dominates(const ConvexPolygon& a, const ConvexPolygon& b);

// max |y_a - y_b| over integer abscissae; requires equal lengths.
Rat max_deviation(const ConvexPolygon& a, const ConvexPolygon& b);

std::string polygon_str(const ConvexPolygon& p);

}  // namespace npoly

#endif
