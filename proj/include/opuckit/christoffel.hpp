#ifndef OPUCKIT_CHRISTOFFEL_HPP
#define OPUCKIT_CHRISTOFFEL_HPP

#include <utility>
#include <vector>

#include "opuckit/kernels.hpp"
#include "opuckit/opuc.hpp"
#include "opuckit/poly.hpp"

namespace opuckit {

class MomentList;

/// The degree-2m factor G multiplying the measure, held as a zero multiset
/// plus a real scale on the canonically phased product.  G is self-reciprocal
/// and G(zeta)/zeta^m is nonnegative on the sampled support.
class SelfReciprocalFactor {
public:
    // zeros: nonzero, closed under z -> 1/conj(z) within the pairing
    // tolerance 1e-10 (unimodular zeros pair with themselves).
    // supportAngles: sampling of the base measure's support; the real scale
    // is signed so that G/zeta^m is positive at the sample of largest
    // magnitude and verified nonnegative at every sample.
    static SelfReciprocalFactor make(std::vector<Complex> zeros,
                                     const std::vector<double>& supportAngles);

    int m() const { return m_; }
    double leading() const { return leading_; }
    const std::vector<Complex>& zeros() const { return zeros_; }
    const Polynomial& asPoly() const { return poly_; }

    // Zeros grouped by multiplicity (pairing tolerance), sorted by
    // (|z|, arg z).
    struct ZeroGroup {
        Complex z;
        int multiplicity;
    };
    const std::vector<ZeroGroup>& zeroGroups() const { return groups_; }
    bool hasRepeatedZero() const;

private:
    SelfReciprocalFactor() = default;
    std::vector<Complex> zeros_;
    std::vector<ZeroGroup> groups_;
    double leading_ = 1.0;
    int m_ = 0;
    Polynomial poly_;
};

enum class AdmissibleCondition {
    DegreeBelowIndex,  // deg p_j < j,  j = 1..2m
    DegreeBelowHalf,   // deg p_j < m,  j = 1..2m-1
    VanishAtOrigin     // p_j(0) = 0,   j = 1..2m
};

/// The 2m+1 banded polynomials p_0..p_2m entering the bordered matrix,
/// p_0 = 1, p_2m = z^m, p_j supported on exponents max(0, j-m)..min(j, m).
struct AdmissibleSet {
    int m = 0;
    std::vector<Polynomial> polys;
    AdmissibleCondition condition = AdmissibleCondition::DegreeBelowIndex;

    // p_j = z^floor(j/2); satisfies both the degree conditions.
    static AdmissibleSet floorSet(int m);
    // p_j = z^ceil(j/2); vanishes at the origin for j >= 1.
    static AdmissibleSet ceilSet(int m);

    bool satisfies(AdmissibleCondition c) const;
    void validate() const;  // throws std::invalid_argument on a malformed set
};

// p_j -> z^j conj(p_j(1/conj(z))); an involution swapping the
// DegreeBelowIndex and VanishAtOrigin conditions.
AdmissibleSet hat(const AdmissibleSet& P);

/// Bordered matrix: row 0 holds the column polynomials
/// Q_j(., w) = p_j * K_{n+2m-j}(., w), rows 1..2m their values at the zeros
/// of G (derivative rows for repeated zeros, in multiplicity order).
struct QMatrix {
    std::vector<Polynomial> row0;
    std::vector<std::vector<Complex>> lower;  // 2m rows, 2m+1 columns
};

QMatrix buildQ(const OpucTable& t, const AdmissibleSet& P, const SelfReciprocalFactor& G, int n,
               Complex w);

struct TransformResult {
    Polynomial kernelNu;  // normalized K_n(., w; nu); empty when degenerate
    // Determinant of the bordered matrix as a polynomial in z, up to the
    // positive factor removed by column equilibration; deflated = rawDet / G
    // at the same scale.  In the reflected regime (see transformKernel) both
    // refer to the matrix at 1/conj(w).
    Polynomial rawDet;
    Polynomial deflated;
    bool degenerate = false;
    Complex delta0{0.0};  // minor without row 0 / column 0
    Complex deltaM{0.0};  // minor without row 0 / last column
};

// The determinant route to the transformed kernel: cofactor expansion along
// row 0 with column scaling, deflation by G, then scaling so that the p == 1
// reproducing identity against the nu moments holds.  nuMoments must reach
// order n.  For 0 < |w| < 0.1 the numerically hopeless direct expansion is
// replaced by the reflected evaluation at 1/conj(w) with the hat set, mapped
// back through the kernel symmetry K_n(z,w) = conj(w)^n z^n
// conj(K_n(1/conj(z), 1/conj(w))).
TransformResult transformKernel(const OpucTable& t, const AdmissibleSet& P,
                                const SelfReciprocalFactor& G, int n, Complex w,
                                const MomentList& nuMoments);

// The two 2m x 2m minors of the numeric block (columns 1..2m and 0..2m-1).
// Throws std::domain_error when G has a repeated zero.
std::pair<Complex, Complex> minors(const OpucTable& t, const AdmissibleSet& P,
                                   const SelfReciprocalFactor& G, int n, Complex w);

}  // namespace opuckit

#endif
