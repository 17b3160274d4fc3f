#include "opuckit/kernels.hpp"

#include <cmath>
#include <stdexcept>

namespace opuckit {

namespace {
void checkDepth(const OpucTable& t, int needed, const char* who) {
    if (needed > t.maxDegree()) throw std::invalid_argument(std::string(who) + ": table too shallow");
}
}  // namespace

Complex kernelSum(const OpucTable& t, int n, Complex z, Complex w) {
    checkDepth(t, n, "kernelSum");
    Complex acc(0.0);
    for (int j = 0; j <= n; ++j) acc += std::conj(t.orthonormal(j, w)) * t.orthonormal(j, z);
    return acc;
}

Complex kernelCD(const OpucTable& t, int n, Complex z, Complex w) {
    checkDepth(t, n + 1, "kernelCD");
    const Complex den = std::conj(w) * z - 1.0;
    if (std::abs(den) < 1e-8) return kernelSum(t, n, z, w);
    const Complex top = std::conj(t.orthonormal(n + 1, w)) * t.orthonormal(n + 1, z) -
                        std::conj(t.orthonormalReversed(n + 1, w)) * t.orthonormalReversed(n + 1, z);
    return top / den;
}

KernelEval kernelPoly(const OpucTable& t, int n, Complex w) {
    checkDepth(t, n, "kernelPoly");
    std::vector<Complex> coeffs(static_cast<size_t>(n) + 1, Complex(0.0));
    for (int j = 0; j <= n; ++j) {
        const Complex weight = std::conj(t.orthonormal(j, w)) * t.kappa[j];
        const auto c = t.monic[j].coeffs();
        for (size_t k = 0; k < c.size(); ++k) coeffs[k] += weight * c[k];
    }
    return KernelEval{n, w, Polynomial(std::move(coeffs))};
}

Polynomial kernelDerivPoly(const OpucTable& t, int n, Complex w) {
    return kernelPoly(t, n, w).asPoly.derivative();
}

std::vector<Complex> kernelRoots(const KernelEval& k) { return roots(k.asPoly); }

}  // namespace opuckit
