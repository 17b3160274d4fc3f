#ifndef OPUCKIT_ORACLE_HPP
#define OPUCKIT_ORACLE_HPP

#include <span>
#include <vector>

#include "opuckit/measures.hpp"
#include "opuckit/opuc.hpp"
#include "opuckit/poly.hpp"

namespace opuckit {

class SelfReciprocalFactor;

/// Trigonometric moments value(k) = integral of zeta^{-k} over the measure,
/// |k| <= maxOrder, with value(-k) = conj(value(k)) by construction.
class MomentList {
public:
    MomentList() = default;
    // values[k] is the k-th nonnegative-order moment; values[0] must be the
    // (positive) total mass.
    explicit MomentList(std::vector<Complex> values);

    int maxOrder() const { return static_cast<int>(v_.size()) - 1; }
    Complex value(int k) const;
    double totalMass() const { return v_.empty() ? 0.0 : v_[0].real(); }

private:
    std::vector<Complex> v_;
};

// Moments recovered from the Verblunsky source alone, by solving the
// orthogonality of each monic Phi_n against 1 front to back.
MomentList momentsFromAlpha(const MeasureModel& m, int K);

// Moments by direct quadrature against the density plus point masses.
// Smooth weights use the doubling periodic trapezoid rule; arc-supported or
// endpoint-singular weights use graded composite Gauss panels.
// Throws std::domain_error for the explicit families.
MomentList momentsQuadrature(const MeasureModel& m, int K);

// Moments of d(nu) = (G(zeta)/zeta^m) d(mu):  nu_k = sum_j G_j mu_{k+m-j}.
// Throws std::invalid_argument when mu is not deep enough.
MomentList transformMoments(const MomentList& mu, const SelfReciprocalFactor& G);

struct LevinsonResult {
    std::vector<Complex> alphas;     // alpha_0..alpha_{N-1}
    std::vector<Polynomial> monic;   // Phi_0..Phi_N
    std::vector<double> pivots;      // <Phi_n*, 1> = ||Phi_n||^2, n = 0..N
};

// Toeplitz orthogonalization of the moment data; the single source of
// Verblunsky coefficients for transformed measures.  A pivot that is not a
// positive real signals data that is not a positive measure and throws
// std::domain_error.
LevinsonResult levinson(const MomentList& nu, int N);

// CD kernel of the measure described by explicit Verblunsky data.
Complex kernelOracle(std::span<const Complex> alphas, double totalMass, int n, Complex z,
                     Complex w);

}  // namespace opuckit

#endif
