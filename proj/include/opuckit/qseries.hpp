#ifndef OPUCKIT_QSERIES_HPP
#define OPUCKIT_QSERIES_HPP

#include <complex>

namespace opuckit::qf {

using Complex = std::complex<double>;

// (a; q)_n = prod_{j=0}^{n-1} (1 - a q^j)
Complex qPochhammer(Complex a, double q, int n);

// (a; q)_infinity, the product truncated at the first K with q^K < 1e-17.
Complex qPochhammerInf(Complex a, double q);

// Basic hypergeometric series 2phi1(a, b; c; q, z).
// Requires 0 < q < 1 and either a terminating numerator parameter or |z| < 1.
Complex phi21(Complex a, Complex b, Complex c, double q, Complex z);

// Pochhammer symbol (x)_k = x (x+1) ... (x+k-1).
Complex pochhammer(Complex x, int k);

// Terminating Gauss series 2F1(-n, b; c; x).
Complex f21Terminating(int n, Complex b, Complex c, Complex x);

}  // namespace opuckit::qf

#endif
