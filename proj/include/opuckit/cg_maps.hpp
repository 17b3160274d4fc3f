#ifndef OPUCKIT_CG_MAPS_HPP
#define OPUCKIT_CG_MAPS_HPP

#include <cmath>
#include <complex>
#include <stdexcept>

namespace opuckit {

// One step of the Verblunsky -> (c, g) map and of its inverse.  tau walks the
// unit circle, tau_0 = 1; n-th step consumes alpha_{n-1} or (c_n, g_n).

struct CGStep {
    double c;
    double g;
    std::complex<double> tauNext;
};

inline CGStep cgStep(std::complex<double> tau, std::complex<double> alpha) {
    const std::complex<double> ta = tau * alpha;
    const double den = 1.0 - ta.real();
    if (!(den > 0.0)) throw std::domain_error("cgStep: tau*alpha at 1");
    CGStep s;
    s.c = ta.imag() / (ta.real() - 1.0);
    s.g = 0.5 * std::norm(1.0 - ta) / den;
    s.tauNext = (tau - std::conj(alpha)) / (1.0 - ta);
    return s;
}

struct AlphaStep {
    std::complex<double> alpha;
    std::complex<double> tauNext;
};

inline AlphaStep alphaStep(std::complex<double> tau, double c, double g) {
    if (!(g > 0.0 && g < 1.0)) throw std::domain_error("alphaStep: g outside (0,1)");
    const std::complex<double> ic(0.0, c);
    AlphaStep s;
    s.alpha = (1.0 - 2.0 * g - ic) / ((1.0 - ic) * tau);
    s.tauNext = tau * (1.0 - ic) / (1.0 + ic);
    return s;
}

}  // namespace opuckit

#endif
