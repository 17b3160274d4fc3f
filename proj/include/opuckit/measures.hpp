#ifndef OPUCKIT_MEASURES_HPP
#define OPUCKIT_MEASURES_HPP

#include <string>
#include <utility>
#include <vector>

#include "opuckit/poly.hpp"

namespace opuckit {

struct PointMass {
    double angle = 0.0;  // radians
    double mass = 0.0;   // >= 0
};

// Support of a measure on the unit circle: either the whole circle or the
// closed arc [a, b] in angle (0 <= a <= b <= 2*pi), plus any mass points.
struct SupportArc {
    bool wholeCircle = true;
    double a = 0.0;
    double b = 0.0;
};

enum class Family { Lebesgue, Geronimus, QHyper, HyperJacobi, ExplicitAlpha, ExplicitCG };

/// A measure on the unit circle from the built-in catalogue or from explicit
/// user data, exposed uniformly as a Verblunsky source and a (c, g) source,
/// with an integrable density where the family has one.  Immutable after
/// construction; all accessors are pure.
class MeasureModel {
public:
    static MeasureModel lebesgue();
    // Constant Verblunsky parameter alpha, 0 < |alpha| < 1, rotated so that
    // the possible mass point sits at angle 0.
    static MeasureModel geronimus(Complex alpha);
    // Basic-hypergeometric weight, 0 < q < 1, Re(b) > 0.
    static MeasureModel qhyper(double q, Complex b);
    // sin^(2 Re b) weight with a drift factor, Re(b) > -1/2.
    static MeasureModel hyperJacobi(Complex b);
    static MeasureModel explicitAlpha(std::vector<Complex> alphas, double totalMass);
    static MeasureModel explicitCG(std::vector<double> c, std::vector<double> g,
                                   double totalMass);

    Family family() const { return family_; }
    std::string name() const;
    double totalMass() const { return mass_; }

    // Verblunsky coefficient alpha_n, n >= 0.
    Complex alpha(int n) const;
    // alpha_0 .. alpha_{count-1} in one pass.
    std::vector<Complex> alphas(int count) const;

    // The pair (c_n, g_n), n >= 1; closed forms for QHyper/HyperJacobi and
    // Geronimus, the recursion through tau otherwise.
    std::pair<double, double> cg(int n) const;

    bool hasDensity() const;
    // Absolutely continuous density with respect to d(theta); zero off the
    // support arc.  Throws std::domain_error for the explicit families.
    double density(double theta) const;
    std::vector<PointMass> pointMasses() const;
    SupportArc support() const;
    // Sampling of the support used for positivity certificates, count >= 1.
    std::vector<double> supportAngles(int count) const;
    // True when the weight is smooth enough for spectrally convergent
    // trapezoid quadrature.
    bool smoothWeight() const;

    // Family parameters (valid for the matching family only).
    Complex alphaParam() const { return alpha_; }
    double qParam() const { return q_; }
    Complex bParam() const { return b_; }
    const std::vector<Complex>& alphaList() const { return alphaList_; }
    const std::vector<double>& cList() const { return cList_; }
    const std::vector<double>& gList() const { return gList_; }

private:
    MeasureModel() = default;

    Family family_ = Family::Lebesgue;
    Complex alpha_{0.0};
    Complex b_{0.0};
    double q_ = 0.0;
    double mass_ = 1.0;
    std::vector<Complex> alphaList_;
    std::vector<double> cList_, gList_;
    double hjNorm_ = 0.0;     // HyperJacobi density prefactor (numeric)
    double qhRho_ = 0.0;      // QHyper normalization constant
};

// Geronimus family geometry for parameter alpha (0 < |alpha| < 1):
// rotation w_alpha = e^{i theta} moving the mass point to angle 0, the
// support arc endpoints for the rotated measure, the mass of the point at
// angle 0, and the two unimodular zeros bounding the gap arc.
Complex geronimusRotation(Complex alpha);
SupportArc geronimusArc(Complex alpha);
double geronimusMassAtOne(Complex alpha);
std::pair<Complex, Complex> geronimusZeros(Complex alpha);

}  // namespace opuckit

#endif
