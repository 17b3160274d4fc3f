#include "opuckit/measures.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "opuckit/cg_maps.hpp"
#include "opuckit/qseries.hpp"
#include "quad_util.hpp"

namespace opuckit {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double wrapAngle(double theta) {
    double t = std::fmod(theta, kTwoPi);
    if (t < 0.0) t += kTwoPi;
    return t;
}

Complex qPow(double q, Complex e) { return std::exp(e * std::log(q)); }

// Unnormalized HyperJacobi weight e^{(pi-theta) eta} sin^{2 lambda}(theta/2).
double hjUnnormalized(double theta, double lambda, double eta) {
    const double s2 = std::sin(0.5 * theta) * std::sin(0.5 * theta);
    if (s2 <= 0.0) return lambda > 0.0 ? 0.0 : (lambda == 0.0 ? std::exp((std::numbers::pi - theta) * eta) : HUGE_VAL);
    return std::exp((std::numbers::pi - theta) * eta) * std::pow(s2, lambda);
}

}  // namespace

Complex geronimusRotation(Complex alpha) { return (1.0 + std::conj(alpha)) / (1.0 + alpha); }

SupportArc geronimusArc(Complex alpha) {
    const double thetaAbs = 2.0 * std::asin(std::abs(alpha));
    const double rot = std::arg(geronimusRotation(alpha));
    SupportArc arc;
    arc.wholeCircle = false;
    arc.a = thetaAbs - rot;
    arc.b = kTwoPi - thetaAbs - rot;
    return arc;
}

double geronimusMassAtOne(Complex alpha) {
    const double top = std::max(alpha.real() + std::norm(alpha), 0.0);
    return 2.0 * top / std::norm(1.0 + alpha);
}

std::pair<Complex, Complex> geronimusZeros(Complex alpha) {
    const SupportArc arc = geronimusArc(alpha);
    return {std::polar(1.0, arc.a), std::polar(1.0, arc.b)};
}

MeasureModel MeasureModel::lebesgue() {
    MeasureModel m;
    m.family_ = Family::Lebesgue;
    return m;
}

MeasureModel MeasureModel::geronimus(Complex alpha) {
    const double r = std::abs(alpha);
    if (!(r > 0.0 && r < 1.0))
        throw std::invalid_argument("geronimus: need 0 < |alpha| < 1");
    MeasureModel m;
    m.family_ = Family::Geronimus;
    m.alpha_ = alpha;
    return m;
}

MeasureModel MeasureModel::qhyper(double q, Complex b) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("qhyper: need 0 < q < 1");
    if (!(b.real() > 0.0)) throw std::invalid_argument("qhyper: need Re(b) > 0");
    MeasureModel m;
    m.family_ = Family::QHyper;
    m.q_ = q;
    m.b_ = b;
    // Normalization constant making the density integrate to 1.
    const Complex bb = std::conj(b);
    const Complex rho = (1.0 - qPow(q, bb)) /
                            qf::phi21(q, qPow(q, 1.0 - b), qPow(q, bb + 1.0), q, qPow(q, b)) *
                        qf::qPochhammerInf(q, q) * qf::qPochhammerInf(qPow(q, b + bb), q) /
                        (qf::qPochhammerInf(qPow(q, b), q) * qf::qPochhammerInf(qPow(q, bb), q));
    if (std::abs(rho.imag()) > 1e-10 * (1.0 + std::abs(rho)) || rho.real() <= 0.0)
        throw std::runtime_error("qhyper: normalization constant not positive real");
    m.qhRho_ = rho.real();
    return m;
}

MeasureModel MeasureModel::hyperJacobi(Complex b) {
    if (!(b.real() > -0.5)) throw std::invalid_argument("hyperJacobi: need Re(b) > -1/2");
    MeasureModel m;
    m.family_ = Family::HyperJacobi;
    m.b_ = b;
    const double lambda = b.real();
    const double eta = b.imag();
    quad::NodeSet ns = quad::gradedNodes(0.0, kTwoPi);
    quad::KahanSum total;
    for (size_t i = 0; i < ns.x.size(); ++i)
        total.add(ns.w[i] * hjUnnormalized(ns.x[i], lambda, eta));
    m.hjNorm_ = 1.0 / total.value();
    return m;
}

MeasureModel MeasureModel::explicitAlpha(std::vector<Complex> alphas, double totalMass) {
    if (!(totalMass > 0.0)) throw std::invalid_argument("explicitAlpha: total mass must be > 0");
    for (const auto& a : alphas)
        if (!(std::abs(a) < 1.0))
            throw std::invalid_argument("explicitAlpha: coefficients must have |alpha| < 1");
    MeasureModel m;
    m.family_ = Family::ExplicitAlpha;
    m.alphaList_ = std::move(alphas);
    m.mass_ = totalMass;
    return m;
}

MeasureModel MeasureModel::explicitCG(std::vector<double> c, std::vector<double> g,
                                      double totalMass) {
    if (!(totalMass > 0.0)) throw std::invalid_argument("explicitCG: total mass must be > 0");
    if (c.size() != g.size()) throw std::invalid_argument("explicitCG: c and g sizes differ");
    for (double gn : g)
        if (!(gn > 0.0 && gn < 1.0))
            throw std::invalid_argument("explicitCG: every g must lie in (0,1)");
    MeasureModel m;
    m.family_ = Family::ExplicitCG;
    m.cList_ = std::move(c);
    m.gList_ = std::move(g);
    m.mass_ = totalMass;
    return m;
}

std::string MeasureModel::name() const {
    switch (family_) {
        case Family::Lebesgue: return "lebesgue";
        case Family::Geronimus: return "geronimus";
        case Family::QHyper: return "qhyper";
        case Family::HyperJacobi: return "hyper";
        case Family::ExplicitAlpha: return "explicit-alpha";
        case Family::ExplicitCG: return "explicit-cg";
    }
    return "?";
}

std::pair<double, double> MeasureModel::cg(int n) const {
    if (n < 1) throw std::invalid_argument("cg: index starts at 1");
    switch (family_) {
        case Family::Lebesgue:
            return {0.0, 0.5};
        case Family::Geronimus: {
            const double den = 1.0 + alpha_.real();
            return {-alpha_.imag() / den, (1.0 - std::norm(alpha_)) / (2.0 * den)};
        }
        case Family::QHyper: {
            const Complex bb = std::conj(b_);
            const double lambda = b_.real();
            const double etaq = -b_.imag() * std::log(q_);
            const double p = std::pow(q_, lambda + n - 1);
            const double den = 1.0 - p * std::cos(etaq);
            const double c = p * std::sin(etaq) / den;
            const Complex num = (1.0 - qPow(q_, bb + static_cast<double>(n - 1))) *
                                qf::phi21(qPow(q_, static_cast<double>(n - 1)), qPow(q_, 1.0 - b_),
                                          qPow(q_, bb + static_cast<double>(n - 1)), q_, qPow(q_, b_));
            const Complex denPhi =
                qf::phi21(qPow(q_, static_cast<double>(n)), qPow(q_, 1.0 - b_),
                          qPow(q_, bb + static_cast<double>(n)), q_, qPow(q_, b_));
            const Complex g = 0.5 * num / (den * denPhi);
            if (std::abs(g.imag()) > 1e-9 * (1.0 + std::abs(g)))
                throw std::runtime_error("qhyper: g came out non-real");
            return {c, g.real()};
        }
        case Family::HyperJacobi: {
            const double lambda = b_.real(), eta = b_.imag();
            return {eta / (lambda + n), 0.5 * (2.0 * lambda + n) / (lambda + n)};
        }
        case Family::ExplicitCG: {
            if (n > static_cast<int>(cList_.size()))
                throw std::out_of_range("explicitCG: cg index beyond supplied data");
            return {cList_[n - 1], gList_[n - 1]};
        }
        case Family::ExplicitAlpha: {
            if (n > static_cast<int>(alphaList_.size()))
                throw std::out_of_range("explicitAlpha: cg index beyond supplied data");
            Complex tau(1.0);
            CGStep s{};
            for (int k = 1; k <= n; ++k) {
                s = cgStep(tau, alphaList_[k - 1]);
                tau = s.tauNext;
            }
            return {s.c, s.g};
        }
    }
    throw std::logic_error("cg: unreachable");
}

std::vector<Complex> MeasureModel::alphas(int count) const {
    if (count < 0) throw std::invalid_argument("alphas: negative count");
    std::vector<Complex> out;
    out.reserve(static_cast<size_t>(count));
    switch (family_) {
        case Family::Lebesgue:
            out.assign(static_cast<size_t>(count), Complex(0.0));
            break;
        case Family::Geronimus: {
            const Complex w = geronimusRotation(alpha_);
            Complex rot = w;
            for (int n = 0; n < count; ++n) {
                out.push_back(rot * alpha_);
                rot *= w;
            }
            break;
        }
        case Family::ExplicitAlpha:
            if (count > static_cast<int>(alphaList_.size()))
                throw std::out_of_range("explicitAlpha: coefficient list exhausted");
            out.assign(alphaList_.begin(), alphaList_.begin() + count);
            break;
        case Family::QHyper:
        case Family::HyperJacobi:
        case Family::ExplicitCG: {
            Complex tau(1.0);
            for (int n = 1; n <= count; ++n) {
                const auto [c, g] = cg(n);
                const AlphaStep s = alphaStep(tau, c, g);
                out.push_back(s.alpha);
                tau = s.tauNext;
            }
            break;
        }
    }
    return out;
}

Complex MeasureModel::alpha(int n) const {
    if (n < 0) throw std::invalid_argument("alpha: negative index");
    return alphas(n + 1).back();
}

bool MeasureModel::hasDensity() const {
    return family_ != Family::ExplicitAlpha && family_ != Family::ExplicitCG;
}

double MeasureModel::density(double theta) const {
    const double t = wrapAngle(theta);
    switch (family_) {
        case Family::Lebesgue:
            return 1.0 / kTwoPi;
        case Family::Geronimus: {
            const SupportArc arc = geronimusArc(alpha_);
            if (t < arc.a || t > arc.b) return 0.0;
            const double thetaAbs = 2.0 * std::asin(std::abs(alpha_));
            const double rot = std::arg(geronimusRotation(alpha_));
            const double ca = std::cos(0.5 * thetaAbs);
            const double ct = std::cos(0.5 * (t + rot));
            const double rad = std::max(ca * ca - ct * ct, 0.0);
            return std::sqrt(rad) / (kTwoPi * std::abs(1.0 + alpha_) * std::sin(0.5 * t));
        }
        case Family::QHyper: {
            const Complex zeta = std::polar(1.0, t);
            const Complex top = qf::qPochhammerInf(q_ * zeta, q_);
            const Complex bot = qf::qPochhammerInf(qPow(q_, b_) * zeta, q_);
            return qhRho_ / kTwoPi * std::norm(top) / std::norm(bot);
        }
        case Family::HyperJacobi:
            return hjNorm_ * hjUnnormalized(t, b_.real(), b_.imag());
        default:
            throw std::domain_error("density: no density for explicit families");
    }
}

std::vector<PointMass> MeasureModel::pointMasses() const {
    if (!hasDensity()) throw std::domain_error("pointMasses: no density for explicit families");
    if (family_ == Family::Geronimus) {
        const double mass = geronimusMassAtOne(alpha_);
        if (mass > 0.0) return {PointMass{0.0, mass}};
    }
    return {};
}

SupportArc MeasureModel::support() const {
    if (family_ == Family::Geronimus) return geronimusArc(alpha_);
    return SupportArc{};
}

std::vector<double> MeasureModel::supportAngles(int count) const {
    if (count < 1) throw std::invalid_argument("supportAngles: count must be >= 1");
    std::vector<double> out;
    out.reserve(static_cast<size_t>(count) + 1);
    const SupportArc arc = support();
    const double a = arc.wholeCircle ? 0.0 : arc.a;
    const double b = arc.wholeCircle ? kTwoPi : arc.b;
    for (int i = 0; i < count; ++i)
        out.push_back(a + (b - a) * (i + 0.5) / static_cast<double>(count));
    if (family_ == Family::Geronimus && geronimusMassAtOne(alpha_) > 0.0) out.push_back(0.0);
    return out;
}

bool MeasureModel::smoothWeight() const {
    switch (family_) {
        case Family::Lebesgue:
        case Family::QHyper:
            return true;
        case Family::HyperJacobi:
            return b_.real() >= 0.0;
        default:
            return false;
    }
}

}  // namespace opuckit
