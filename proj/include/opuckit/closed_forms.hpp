#ifndef OPUCKIT_CLOSED_FORMS_HPP
#define OPUCKIT_CLOSED_FORMS_HPP

#include <utility>

#include "opuckit/poly.hpp"

namespace opuckit::closed {

// ---- Lebesgue ----

// K_n(z, w) = (1 - (conj(w) z)^{n+1}) / (1 - conj(w) z).
Complex lebesgueKernel(int n, Complex z, Complex w);

// The w -> 0 limit of the transformed kernel for zeros {z1, z2 = 1/conj(z1)}:
// [(z^{n+2}-z1^{n+2})(z-z2) - (z^{n+2}-z2^{n+2})(z-z1)] / ((z-z1)(z-z2)),
// returned as a polynomial of degree n (unnormalized).
Polynomial lebesgueTransformedOriginKernel(int n, Complex z1, Complex z2);

// ---- Geronimus family (rotated, constant parameter alpha) ----

double geronimusC(Complex alpha);
double geronimusG(Complex alpha);
double geronimusD(Complex alpha);

// R_n by the difference-equation solution
// [(f1+f2)^{n+1} - (f1-f2)^{n+1}] / (2^{n+1} f2), f2^2 = f1^2 - 16 d z.
Complex geronimusR(Complex alpha, int n, Complex z);

// Connection coefficient against the gap-arc factor: a_2^{(n)} = -4 (n+3)/(n+1) d.
double geronimusA2(Complex alpha, int n);

// Transformed parameters: c_n(nu) = c(alpha) and
// g_n(nu) = 1 - (1-g) n/(n+1) [(n+1)(1-g) - (n+3) g] / [n(1-g) - (n+2) g].
double geronimusTransformedC(Complex alpha);
double geronimusTransformedG(Complex alpha, int n);

// ---- q-hypergeometric family ----

std::pair<Complex, Complex> qhyperZeros(double q, Complex b);  // {q^{-b}, q^{conj b}}
Complex qhyperR(double q, Complex b, int n, Complex z);
Complex qhyperA1(double q, Complex b, int n);
Complex qhyperA2(double q, Complex b, int n);
Complex qhyperGamma(double q, Complex b, int n);

// ---- hypergeometric family ----

Complex hyperjacobiR(Complex b, int n, Complex z);
Complex hyperjacobiMonic(Complex b, int n, Complex z);
// Confluent connection data for the double zero at 1, normalized against
// the factor (z-1)^2; rescale by the actual factor's orientation when
// comparing.
Complex hyperjacobiA1(Complex b, int n);
Complex hyperjacobiA2(Complex b, int n);
Complex hyperjacobiGamma(Complex b, int n);

}  // namespace opuckit::closed

#endif
