#ifndef OPUCKIT_QUAD_UTIL_HPP
#define OPUCKIT_QUAD_UTIL_HPP

#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

namespace opuckit::quad {

// 16-point Gauss-Legendre rule on [-1, 1] (positive half; nodes symmetric).
inline constexpr double kGL16Node[8] = {
    0.0950125098376374401853193, 0.2816035507792589132304605,
    0.4580167776572273863424194, 0.6178762444026437484466718,
    0.7554044083550030338951012, 0.8656312023878317438804679,
    0.9445750230732325760779884, 0.9894009349916499325961542};
inline constexpr double kGL16Weight[8] = {
    0.1894506104550684962853967, 0.1826034150449235888667637,
    0.1691565193950025381893121, 0.1495959888165767320815017,
    0.1246289712555338720524763, 0.0951585116824927848099251,
    0.0622535239386478928628438, 0.0271524594117540948517806};

struct NodeSet {
    std::vector<double> x;
    std::vector<double> w;
};

inline void appendGauss16(NodeSet& ns, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    for (int i = 0; i < 8; ++i) {
        ns.x.push_back(mid - half * kGL16Node[i]);
        ns.w.push_back(half * kGL16Weight[i]);
        ns.x.push_back(mid + half * kGL16Node[i]);
        ns.w.push_back(half * kGL16Weight[i]);
    }
}

// Composite Gauss nodes on [a, b] with panels graded geometrically toward
// both endpoints (ratio 1/2, `panelsPerEnd` panels each side).
inline NodeSet gradedNodes(double a, double b, int panelsPerEnd = 32) {
    NodeSet ns;
    const double mid = 0.5 * (a + b);
    std::vector<double> breaks;
    breaks.push_back(a);
    for (int k = panelsPerEnd; k >= 1; --k)
        breaks.push_back(a + (mid - a) * std::pow(0.5, static_cast<double>(k)));
    breaks.push_back(mid);
    for (int k = 1; k <= panelsPerEnd; ++k)
        breaks.push_back(b - (b - mid) * std::pow(0.5, static_cast<double>(k)));
    breaks.push_back(b);
    for (size_t i = 0; i + 1 < breaks.size(); ++i) appendGauss16(ns, breaks[i], breaks[i + 1]);
    return ns;
}

// Compensated (Kahan) accumulator so node sums are order-stable.
struct KahanSum {
    double s = 0.0, c = 0.0;
    void add(double v) {
        const double y = v - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    double value() const { return s; }
};

}  // namespace opuckit::quad

#endif
