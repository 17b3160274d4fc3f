#ifndef OPUCKIT_POLY_HPP
#define OPUCKIT_POLY_HPP

#include <complex>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace opuckit {

using Complex = std::complex<double>;

/// Dense polynomial in z with complex coefficients, coefficient k belonging
/// to z^k.  Trailing coefficients below 1e-12 of the largest magnitude are
/// trimmed away, so degree decisions (deflation, confluence detection) stay
/// tolerance-driven.  The zero polynomial is represented by an empty vector
/// and reports degree() == -1.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Complex> coeffs) : coef_(std::move(coeffs)) { trim(); }
    Polynomial(std::initializer_list<Complex> coeffs) : coef_(coeffs) { trim(); }

    static Polynomial zero() { return Polynomial{}; }
    static Polynomial one() { return Polynomial{Complex(1.0)}; }
    // c * z^k
    static Polynomial monomial(int k, Complex c = Complex(1.0));

    int degree() const { return static_cast<int>(coef_.size()) - 1; }
    bool isZero() const { return coef_.empty(); }
    std::span<const Complex> coeffs() const { return coef_; }
    Complex coeff(int k) const {
        return (k >= 0 && k < static_cast<int>(coef_.size())) ? coef_[k] : Complex(0.0);
    }
    double maxAbsCoeff() const;

    Complex operator()(Complex z) const;  // Horner evaluation

    // Conjugate-reciprocal with the degree declared explicitly:
    // result coefficient k is the conjugate of coefficient declaredDegree-k.
    // Throws std::invalid_argument when declaredDegree < degree().
    Polynomial conjReverse(int declaredDegree) const;

    Polynomial derivative() const;

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(Complex s) const;
    friend Polynomial operator*(Complex s, const Polynomial& p) { return p * s; }

    // Euclidean division: p = quotient*d + remainder, deg(remainder) < deg(d).
    // Throws std::invalid_argument when d is the zero polynomial.
    static std::pair<Polynomial, Polynomial> divide(const Polynomial& p, const Polynomial& d);

private:
    void trim();
    std::vector<Complex> coef_;
};

// All roots (with multiplicity) as eigenvalues of the companion matrix.
// Throws std::invalid_argument for the zero polynomial; a constant has none.
std::vector<Complex> roots(const Polynomial& p);

}  // namespace opuckit

#endif
