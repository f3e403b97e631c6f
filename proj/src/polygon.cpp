#include "npoly/polygon.hpp"

#include <algorithm>
#include <map>

#include "npoly/errors.hpp"

namespace npoly {

namespace {

ConvexPolygon from_slope_counts(const std::map<Rat, long>& counts) {
    std::vector<ConvexPolygon::Run> runs;
    runs.reserve(counts.size());
    for (const auto& [s, m] : counts)
        if (m > 0) runs.emplace_back(s, m);
    return ConvexPolygon::from_runs(std::move(runs));
}

}  // namespace

ConvexPolygon ConvexPolygon::from_slopes(std::vector<Rat> slopes) {
    std::map<Rat, long> counts;
    for (auto& s : slopes) ++counts[s];
    return from_slope_counts(counts);
}

ConvexPolygon ConvexPolygon::from_runs(std::vector<Run> runs) {
    std::sort(runs.begin(), runs.end(),
              [](const Run& a, const Run& b) { return a.first < b.first; });
    ConvexPolygon p;
    for (auto& [s, m] : runs) {
        if (m < 1) throw MathError("polygon run with multiplicity < 1");
        if (!p.runs_.empty() && p.runs_.back().first == s)
            p.runs_.back().second += m;
        else
            p.runs_.emplace_back(s, m);
    }
    return p;
}

long ConvexPolygon::length() const {
    long n = 0;
    for (const auto& r : runs_) n += r.second;
    return n;
}

std::vector<Rat> ConvexPolygon::slopes() const {
    std::vector<Rat> out;
    out.reserve(length());
    for (const auto& [s, m] : runs_)
        for (long i = 0; i < m; ++i) out.push_back(s);
    return out;
}

std::vector<std::pair<long, Rat>> ConvexPolygon::vertices() const {
    std::vector<std::pair<long, Rat>> v;
    v.emplace_back(0, Rat(0));
    Rat y(0);
    long x = 0;
    for (const auto& [s, m] : runs_)
        for (long i = 0; i < m; ++i) {
            y += s;
            v.emplace_back(++x, y);
        }
    return v;
}

Rat ConvexPolygon::sum_of_slopes() const {
    Rat y(0);
    for (const auto& [s, m] : runs_) y += s * m;
    return y;
}

ConvexPolygon product(const ConvexPolygon& a, const ConvexPolygon& b) {
    std::map<Rat, long> counts;
    for (const auto& [sa, ma] : a.runs())
        for (const auto& [sb, mb] : b.runs()) counts[sa + sb] += ma * mb;
    return from_slope_counts(counts);
}

ConvexPolygon juxtapose(const ConvexPolygon& a, const ConvexPolygon& b) {
    std::map<Rat, long> counts;
    for (const auto& [s, m] : a.runs()) counts[s] += m;
    for (const auto& [s, m] : b.runs()) counts[s] += m;
    return from_slope_counts(counts);
}

ConvexPolygon average(const std::vector<ConvexPolygon>& polys) {
    if (polys.empty()) throw MathError("average of no polygons");
    const long len = polys.front().length();
    for (const auto& p : polys)
        if (p.length() != len) throw MathError("unequal polygon lengths");
    const long n = static_cast<long>(polys.size());

    // Walk all run lists in parallel; each step consumes the largest common
    // chunk, so the cost is linear in the total number of runs.
    std::vector<std::size_t> idx(polys.size(), 0);
    std::vector<long> used(polys.size(), 0);
    std::vector<ConvexPolygon::Run> runs;
    long done = 0;
    while (done < len) {
        Rat slope_sum(0);
        long chunk = len - done;
        for (std::size_t k = 0; k < polys.size(); ++k) {
            const auto& [s, m] = polys[k].runs()[idx[k]];
            slope_sum += s;
            chunk = std::min(chunk, m - used[k]);
        }
        Rat mean = slope_sum / n;
        if (!runs.empty() && runs.back().first == mean)
            runs.back().second += chunk;
        else
            runs.emplace_back(mean, chunk);
        for (std::size_t k = 0; k < polys.size(); ++k) {
            used[k] += chunk;
            if (used[k] == polys[k].runs()[idx[k]].second) {
                ++idx[k];
                used[k] = 0;
            }
        }
        done += chunk;
    }
    return ConvexPolygon::from_runs(std::move(runs));
}

bool dominates(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.length() != b.length()) throw MathError("dominates: unequal polygon lengths");
    const auto sa = a.slopes(), sb = b.slopes();
    Rat ya(0), yb(0);
    for (std::size_t i = 0; i < sa.size(); ++i) {
        ya += sa[i];
        yb += sb[i];
        if (i + 1 < sa.size() && ya < yb) return false;
    }
    return ya == yb;
}

Rat max_deviation(const ConvexPolygon& a, const ConvexPolygon& b) {
    if (a.length() != b.length()) throw MathError("max_deviation: unequal polygon lengths");
    const auto sa = a.slopes(), sb = b.slopes();
    Rat ya(0), yb(0), best(0);
    for (std::size_t i = 0; i < sa.size(); ++i) {
        ya += sa[i];
        yb += sb[i];
        Rat d = ya > yb ? ya - yb : yb - ya;
        if (d > best) best = d;
    }
    return best;
}

std::string polygon_str(const ConvexPolygon& p) {
    std::string out = "{";
    bool first = true;
    for (const auto& [s, m] : p.runs()) {
        if (!first) out += ", ";
        first = false;
        out += rat_str(s);
        if (m > 1) out += " x" + std::to_string(m);
    }
    return out + "}";
}

}  // namespace npoly
