#include "opuckit/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "opuckit/measures.hpp"
#include "opuckit/qseries.hpp"

namespace opuckit::closed {

namespace {
Complex qPow(double q, Complex e) { return std::exp(e * std::log(q)); }

Complex ipow(Complex z, int n) {
    Complex acc(1.0);
    for (int i = 0; i < n; ++i) acc *= z;
    return acc;
}
}  // namespace

Complex lebesgueKernel(int n, Complex z, Complex w) {
    const Complex x = std::conj(w) * z;
    if (std::abs(x - 1.0) < 1e-8) {
        Complex acc(0.0), p(1.0);
        for (int j = 0; j <= n; ++j) {
            acc += p;
            p *= x;
        }
        return acc;
    }
    return (1.0 - ipow(x, n + 1)) / (1.0 - x);
}

Polynomial lebesgueTransformedOriginKernel(int n, Complex z1, Complex z2) {
    auto zPowMinus = [&](int k, Complex a) {  // z^k - a^k
        std::vector<Complex> c(static_cast<size_t>(k) + 1, Complex(0.0));
        c[0] = -ipow(a, k);
        c[k] = 1.0;
        return Polynomial(std::move(c));
    };
    const Polynomial num = zPowMinus(n + 2, z1) * Polynomial({-z2, 1.0}) -
                           zPowMinus(n + 2, z2) * Polynomial({-z1, 1.0});
    const Polynomial den = Polynomial({-z1, 1.0}) * Polynomial({-z2, 1.0});
    auto [quot, rem] = Polynomial::divide(num, den);
    if (rem.maxAbsCoeff() > 1e-9 * num.maxAbsCoeff())
        throw std::runtime_error("origin kernel: deflation remainder");
    return quot;
}

double geronimusC(Complex alpha) { return -alpha.imag() / (1.0 + alpha.real()); }

double geronimusG(Complex alpha) {
    return (1.0 - std::norm(alpha)) / (2.0 * (1.0 + alpha.real()));
}

double geronimusD(Complex alpha) {
    const double g = geronimusG(alpha);
    return (1.0 - g) * g;
}

Complex geronimusR(Complex alpha, int n, Complex z) {
    const Complex ic(0.0, geronimusC(alpha));
    const double d = geronimusD(alpha);
    const Complex f1 = (1.0 + ic) * z + (1.0 - ic);
    const Complex f2 = std::sqrt(f1 * f1 - 16.0 * d * z);
    if (std::abs(f2) < 1e-12 * (1.0 + std::abs(f1)))
        return static_cast<double>(n + 1) * ipow(0.5 * f1, n);
    return (ipow(f1 + f2, n + 1) - ipow(f1 - f2, n + 1)) / (std::pow(2.0, n + 1) * f2);
}

double geronimusA2(Complex alpha, int n) {
    return -4.0 * (n + 3.0) / (n + 1.0) * geronimusD(alpha);
}

double geronimusTransformedC(Complex alpha) { return geronimusC(alpha); }

double geronimusTransformedG(Complex alpha, int n) {
    const double g = geronimusG(alpha);
    const double u = 1.0 - g;
    const double nn = static_cast<double>(n);
    return 1.0 - u * nn / (nn + 1.0) * ((nn + 1.0) * u - (nn + 3.0) * g) /
                     (nn * u - (nn + 2.0) * g);
}

std::pair<Complex, Complex> qhyperZeros(double q, Complex b) {
    return {qPow(q, -b), qPow(q, std::conj(b))};
}

Complex qhyperR(double q, Complex b, int n, Complex z) {
    const Complex bb = std::conj(b);
    const double lambda = b.real();
    const double etaq = -b.imag() * std::log(q);
    const Complex pre = qf::qPochhammer(qPow(q, bb), q, n) /
                        qf::qPochhammer(Complex(std::pow(q, lambda) * std::cos(etaq)), q, n);
    return pre * qf::phi21(Complex(std::pow(q, -static_cast<double>(n))), qPow(q, b),
                           qPow(q, -bb - static_cast<double>(n) + 1.0), q,
                           qPow(q, 1.0 - bb) * z);
}

Complex qhyperA1(double q, Complex b, int n) {
    const Complex bb = std::conj(b);
    const double lambda = b.real();
    const double etaq = -b.imag() * std::log(q);
    const double top = 1.0 - std::pow(q, 2.0 * lambda + n + 1);
    const double den = 1.0 - std::pow(q, lambda + n + 1) * std::cos(etaq);
    return top / den * Complex(0.0, 2.0) * std::pow(q, lambda) * std::sin(etaq) /
           (qPow(q, b) * (1.0 - qPow(q, bb)));
}

Complex qhyperA2(double q, Complex b, int n) {
    const Complex bb = std::conj(b);
    const double lambda = b.real();
    const double etaq = -b.imag() * std::log(q);
    const double top = (1.0 - std::pow(q, 2.0 * lambda + n)) *
                       (1.0 - std::pow(q, 2.0 * lambda + n + 1));
    const double den = (1.0 - std::pow(q, lambda + n) * std::cos(etaq)) *
                       (1.0 - std::pow(q, lambda + n + 1) * std::cos(etaq));
    return top / den * (1.0 - qPow(q, -b)) / (1.0 - qPow(q, bb));
}

Complex qhyperGamma(double q, Complex b, int n) {
    const Complex bb = std::conj(b);
    const double lambda = b.real();
    const double etaq = -b.imag() * std::log(q);
    return -qPow(q, bb) * (1.0 - qPow(q, b + static_cast<double>(n) + 1.0)) /
           (1.0 - std::pow(q, lambda + n + 1) * std::cos(etaq)) * (1.0 - qPow(q, b)) /
           (1.0 - std::pow(q, lambda) * std::cos(etaq));
}

Complex hyperjacobiR(Complex b, int n, Complex z) {
    const double lambda = b.real();
    const Complex pre = qf::pochhammer(Complex(2.0 * lambda + 2.0), n) /
                        qf::pochhammer(Complex(lambda + 1.0), n);
    return pre * qf::f21Terminating(n, b + 1.0, b + std::conj(b) + 2.0, 1.0 - z);
}

Complex hyperjacobiMonic(Complex b, int n, Complex z) {
    const double lambda = b.real();
    const Complex pre =
        qf::pochhammer(Complex(2.0 * lambda + 1.0), n) / qf::pochhammer(b + 1.0, n);
    return pre * qf::f21Terminating(n, b + 1.0, b + std::conj(b) + 1.0, 1.0 - z);
}

Complex hyperjacobiA1(Complex b, int n) {
    const double lambda = b.real();
    return (b - std::conj(b)) / (std::conj(b) + 1.0) * (2.0 * lambda + n + 3.0) /
           (lambda + n + 2.0);
}

Complex hyperjacobiA2(Complex b, int n) {
    const double lambda = b.real();
    return -(b + 1.0) / (std::conj(b) + 1.0) * (2.0 * lambda + n + 2.0) *
           (2.0 * lambda + n + 3.0) / ((lambda + n + 1.0) * (lambda + n + 2.0));
}

Complex hyperjacobiGamma(Complex b, int n) {
    const double lambda = b.real();
    return (b + 1.0) / (lambda + 1.0) * (b + static_cast<double>(n) + 2.0) /
           (lambda + n + 2.0);
}

}  // namespace opuckit::closed
