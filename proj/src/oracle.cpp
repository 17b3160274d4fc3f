#include "opuckit/oracle.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opuckit/christoffel.hpp"
#include "opuckit/kernels.hpp"
#include "quad_util.hpp"

namespace opuckit {

namespace {
constexpr double kTwoPi = 2.0 * std::numbers::pi;

std::vector<Complex> momentsOnNodes(const MeasureModel& m, int K, const std::vector<double>& x,
                                    const std::vector<double>& w) {
    // One density evaluation per node; e^{-ik theta} built up incrementally.
    std::vector<quad::KahanSum> re(K + 1), im(K + 1);
    for (size_t i = 0; i < x.size(); ++i) {
        const double f = w[i] * m.density(x[i]);
        if (f == 0.0) continue;
        const Complex step = std::polar(1.0, -x[i]);
        Complex phase(1.0);
        for (int k = 0; k <= K; ++k) {
            re[k].add(f * phase.real());
            im[k].add(f * phase.imag());
            phase *= step;
        }
    }
    std::vector<Complex> out(K + 1);
    for (int k = 0; k <= K; ++k) out[k] = Complex(re[k].value(), im[k].value());
    return out;
}

std::vector<Complex> trapezoidMoments(const MeasureModel& m, int K) {
    std::vector<Complex> prev;
    for (int nnodes = 256; nnodes <= (1 << 19); nnodes *= 2) {
        std::vector<double> x(nnodes), w(nnodes, kTwoPi / nnodes);
        for (int i = 0; i < nnodes; ++i) x[i] = kTwoPi * i / nnodes;
        std::vector<Complex> cur = momentsOnNodes(m, K, x, w);
        if (!prev.empty()) {
            double diff = 0.0;
            for (int k = 0; k <= K; ++k) diff = std::max(diff, std::abs(cur[k] - prev[k]));
            if (diff < 1e-10) return cur;
        }
        prev = std::move(cur);
    }
    return {};  // did not settle; caller falls back to graded panels
}

std::vector<Complex> gradedMoments(const MeasureModel& m, int K) {
    const SupportArc arc = m.support();
    const double a = arc.wholeCircle ? 0.0 : arc.a;
    const double b = arc.wholeCircle ? kTwoPi : arc.b;
    const quad::NodeSet ns = quad::gradedNodes(a, b);
    return momentsOnNodes(m, K, ns.x, ns.w);
}
}  // namespace

MomentList::MomentList(std::vector<Complex> values) : v_(std::move(values)) {
    if (v_.empty()) throw std::invalid_argument("MomentList: needs at least the mass");
    if (!(v_[0].real() > 0.0) || std::abs(v_[0].imag()) > 1e-12 * v_[0].real())
        throw std::invalid_argument("MomentList: total mass must be positive real");
}

Complex MomentList::value(int k) const {
    const int a = std::abs(k);
    if (a >= static_cast<int>(v_.size())) throw std::out_of_range("MomentList: order too high");
    return k >= 0 ? v_[a] : std::conj(v_[a]);
}

MomentList momentsFromAlpha(const MeasureModel& m, int K) {
    if (K < 0) throw std::invalid_argument("momentsFromAlpha: negative order");
    const OpucTable t = buildOpuc(m, K);
    std::vector<Complex> mom(K + 1);
    mom[0] = Complex(m.totalMass());
    // 0 = integral of Phi_n: the z^n coefficient is 1, so the n-th moment
    // drops out of the lower-order ones.
    for (int n = 1; n <= K; ++n) {
        const auto c = t.monic[n].coeffs();
        Complex acc(0.0);
        for (int j = 0; j < n; ++j) acc += std::conj(c[j]) * mom[j];
        mom[n] = -acc;
    }
    return MomentList(std::move(mom));
}

MomentList momentsQuadrature(const MeasureModel& m, int K) {
    if (K < 0) throw std::invalid_argument("momentsQuadrature: negative order");
    if (!m.hasDensity()) throw std::domain_error("momentsQuadrature: measure has no density");
    std::vector<Complex> mom;
    if (m.smoothWeight()) mom = trapezoidMoments(m, K);
    if (mom.empty()) mom = gradedMoments(m, K);
    for (const PointMass& pm : m.pointMasses()) {
        const Complex step = std::polar(1.0, -pm.angle);
        Complex phase(1.0);
        for (int k = 0; k <= K; ++k) {
            mom[k] += pm.mass * phase;
            phase *= step;
        }
    }
    return MomentList(std::move(mom));
}

MomentList transformMoments(const MomentList& mu, const SelfReciprocalFactor& G) {
    const int m = G.m();
    const int newOrder = mu.maxOrder() - m;
    if (newOrder < 0) throw std::invalid_argument("transformMoments: insufficient moment depth");
    const auto g = G.asPoly().coeffs();
    std::vector<Complex> out(newOrder + 1, Complex(0.0));
    for (int k = 0; k <= newOrder; ++k)
        for (int j = 0; j < static_cast<int>(g.size()); ++j) out[k] += g[j] * mu.value(k + m - j);
    return MomentList(std::move(out));
}

LevinsonResult levinson(const MomentList& nu, int N) {
    if (N > nu.maxOrder())
        throw std::invalid_argument("levinson: moment list too shallow for requested degree");
    LevinsonResult r;
    r.monic.push_back(Polynomial::one());
    Polynomial rev = Polynomial::one();
    const double scale = nu.totalMass();
    if (!(scale > 0.0)) throw std::domain_error("levinson: not a positive measure (mass)");
    r.pivots.push_back(scale);
    const Polynomial z = Polynomial::monomial(1);
    for (int n = 0; n < N; ++n) {
        const Polynomial phi = r.monic[n];
        // <z Phi_n, 1> and <Phi_n*, 1> through the moments.
        Complex num(0.0);
        for (int j = 0; j <= phi.degree(); ++j) num += phi.coeff(j) * nu.value(-(j + 1));
        Complex piv(0.0);
        for (int j = 0; j <= rev.degree(); ++j) piv += rev.coeff(j) * nu.value(-j);
        if (!(piv.real() > 0.0) || std::abs(piv.imag()) > 1e-8 * (1.0 + std::abs(piv)))
            throw std::domain_error("levinson: not a positive measure (pivot)");
        const Complex alpha = std::conj(num / piv);
        if (!(std::abs(alpha) < 1.0))
            throw std::domain_error("levinson: not a positive measure (|alpha| >= 1)");
        r.alphas.push_back(alpha);
        r.monic.push_back(z * phi - std::conj(alpha) * rev);
        rev = rev - alpha * (z * phi);
        Complex pivNext(0.0);
        for (int j = 0; j <= rev.degree(); ++j) pivNext += rev.coeff(j) * nu.value(-j);
        r.pivots.push_back(pivNext.real());
    }
    return r;
}

Complex kernelOracle(std::span<const Complex> alphas, double totalMass, int n, Complex z,
                     Complex w) {
    if (static_cast<int>(alphas.size()) < n)
        throw std::invalid_argument("kernelOracle: need alpha_0..alpha_{n-1}");
    const OpucTable t = buildOpucFromAlphas(alphas.subspan(0, static_cast<size_t>(n)), totalMass);
    return kernelSum(t, n, z, w);
}

}  // namespace opuckit
