#ifndef OPUCKIT_OPUC_HPP
#define OPUCKIT_OPUC_HPP

#include <span>
#include <vector>

#include "opuckit/measures.hpp"
#include "opuckit/poly.hpp"

namespace opuckit {

/// Monic and reversed monic OPUC Phi_0..Phi_N with the orthonormalizing
/// constants kappa_n and the boundary ratios tau_n = Phi_n(1)/Phi_n*(1).
/// Immutable once built; safe to share across threads.
struct OpucTable {
    std::vector<Polynomial> monic;
    std::vector<Polynomial> reversed;
    std::vector<double> kappa;
    std::vector<Complex> tau;
    double totalMass = 1.0;

    int maxDegree() const { return static_cast<int>(monic.size()) - 1; }
    // Orthonormal polynomial phi_n = kappa_n * Phi_n evaluated at z.
    Complex orthonormal(int n, Complex z) const { return kappa[n] * monic[n](z); }
    Complex orthonormalReversed(int n, Complex z) const { return kappa[n] * reversed[n](z); }
};

// Szego recurrence Phi_n = z Phi_{n-1} - conj(alpha_{n-1}) Phi*_{n-1} with
// kappa_0 = totalMass^{-1/2}, kappa_n = kappa_{n-1} (1-|alpha_{n-1}|^2)^{-1/2},
// and the tau recursion seeded by tau_0 = 1.
// Throws std::domain_error when some |alpha_n| >= 1.
OpucTable buildOpuc(const MeasureModel& m, int N);
OpucTable buildOpucFromAlphas(std::span<const Complex> alphas, double totalMass);

}  // namespace opuckit

#endif
