#ifndef OPUCKIT_KERNELS_HPP
#define OPUCKIT_KERNELS_HPP

#include <vector>

#include "opuckit/opuc.hpp"
#include "opuckit/poly.hpp"

namespace opuckit {

/// K_n(., w) as a polynomial in z; degree is exactly n whenever |w| >= 1.
struct KernelEval {
    int n = 0;
    Complex w{0.0};
    Polynomial asPoly;
};

// K_n(z, w) = sum_{j<=n} conj(phi_j(w)) phi_j(z); needs table depth >= n.
Complex kernelSum(const OpucTable& t, int n, Complex z, Complex w);

// Ratio form of the same kernel through phi_{n+1} and phi*_{n+1}; needs table
// depth >= n+1.  Falls back to the sum when |conj(w) z - 1| < 1e-8, where the
// ratio is a removable singularity.
Complex kernelCD(const OpucTable& t, int n, Complex z, Complex w);

KernelEval kernelPoly(const OpucTable& t, int n, Complex w);
Polynomial kernelDerivPoly(const OpucTable& t, int n, Complex w);

// All zeros of K_n(., w); throws std::invalid_argument on the zero polynomial.
std::vector<Complex> kernelRoots(const KernelEval& k);

}  // namespace opuckit

#endif
