#ifndef OPUCKIT_CGREC_HPP
#define OPUCKIT_CGREC_HPP

#include <span>
#include <vector>

#include "opuckit/christoffel.hpp"
#include "opuckit/measures.hpp"
#include "opuckit/poly.hpp"

namespace opuckit {

enum class XiConvention {
    // xi_n = xi_0 prod 2(1-g_j): the normalization under which the R_n from
    // the three-term recurrence equal xi_n K_n(z, 1).
    Recurrence,
    // xi_n = xi_0 prod (1-g_j): kept for reporting; off from the recurrence
    // normalization by the factor 2^n.
    Printed
};

/// The real parameter pair sequences attached to a measure, with the tau walk
/// and both xi normalizations.  Index n starts at 1 for c, g; tau_0 = 1.
struct CGParams {
    std::vector<double> c;         // c_1..c_N
    std::vector<double> g;         // g_1..g_N
    std::vector<Complex> tau;      // tau_0..tau_N
    double xi0 = 1.0;

    int size() const { return static_cast<int>(c.size()); }
    double cAt(int n) const { return c.at(n - 1); }
    double gAt(int n) const { return g.at(n - 1); }
    // d_{n+1} = (1 - g_n) g_{n+1}, the positive chain sequence.
    double dAt(int n1) const { return (1.0 - gAt(n1 - 1)) * gAt(n1); }
    double xi(int n, XiConvention conv = XiConvention::Recurrence) const;
};

CGParams cgFromAlpha(const MeasureModel& m, int N);
CGParams cgFromAlpha(std::span<const Complex> alphas, double totalMass);

// Inverse map (c, g) -> alpha_0..alpha_{N-1}; throws std::domain_error when
// some g falls outside (0,1).
std::vector<Complex> alphaFromCG(std::span<const double> c, std::span<const double> g, int N);

// Normalized kernels R_0..R_N from the three-term recurrence
//   R_{n+1} = [(1+ic_{n+1}) z + (1-ic_{n+1})] R_n - 4 d_{n+1} z R_{n-1},
// seeded by R_0 = 1 and R_1 = (1+ic_1) z + (1-ic_1).
std::vector<Polynomial> rSequence(const MeasureModel& m, int N);
std::vector<Polynomial> rSequence(std::span<const double> c, std::span<const double> g, int N);

/// Connection data between the R of a measure and the R of its transform:
/// gamma_n G(z) R_n(z; nu) = R_{n+2m}(z; mu) + sum_j a_j^{(n)} p_j(z)
/// R_{n+2m-j}(z; mu) over the floor admissible set.
struct ConnectionCoeffs {
    int m = 0;
    std::vector<std::vector<Complex>> a;  // a[n][j-1] = a_j^{(n)}, j = 1..2m
    std::vector<Complex> gamma;           // gamma_0..gamma_nMax
};

// Solves the 2m x 2m collocation system over the zeros of G for each n and
// runs the gamma recursion from gamma_0 = conj(G(0))^{-1} prod (1+i c_j).
// A repeated zero is supported for m = 1 only (derivative row); repeated
// zeros with m >= 2 throw std::domain_error, a singular system throws
// std::runtime_error.
ConnectionCoeffs connectionCoeffs(const MeasureModel& m, const SelfReciprocalFactor& G,
                                  int nMax);

struct TransformedCG {
    std::vector<double> c;  // c_1(nu)..c_nMax(nu)
    std::vector<double> g;  // g_1(nu)..g_nMax(nu)
};

// (c, g) of the transformed measure from the connection data and the xi
// ratios in the Recurrence convention.  Results must come out real to 1e-9
// (imaginary parts are then discarded); a larger residual throws
// std::runtime_error.
TransformedCG transformedCG(const MeasureModel& m, const SelfReciprocalFactor& G, int nMax);

}  // namespace opuckit

#endif
