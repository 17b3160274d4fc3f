#include "opuckit/poly.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace opuckit {

namespace {
constexpr double kTrimRel = 1e-12;
}

Polynomial Polynomial::monomial(int k, Complex c) {
    std::vector<Complex> v(static_cast<size_t>(k) + 1, Complex(0.0));
    v.back() = c;
    return Polynomial(std::move(v));
}

double Polynomial::maxAbsCoeff() const {
    double m = 0.0;
    for (const auto& c : coef_) m = std::max(m, std::abs(c));
    return m;
}

void Polynomial::trim() {
    const double cut = kTrimRel * maxAbsCoeff();
    while (!coef_.empty() && std::abs(coef_.back()) <= cut) coef_.pop_back();
}

Complex Polynomial::operator()(Complex z) const {
    Complex acc(0.0);
    for (auto it = coef_.rbegin(); it != coef_.rend(); ++it) acc = acc * z + *it;
    return acc;
}

Polynomial Polynomial::conjReverse(int declaredDegree) const {
    if (declaredDegree < degree())
        throw std::invalid_argument("conjReverse: declared degree below actual degree");
    std::vector<Complex> out(static_cast<size_t>(declaredDegree) + 1, Complex(0.0));
    for (int k = 0; k <= declaredDegree; ++k) out[k] = std::conj(coeff(declaredDegree - k));
    return Polynomial(std::move(out));
}

Polynomial Polynomial::derivative() const {
    if (degree() < 1) return Polynomial{};
    std::vector<Complex> out(coef_.size() - 1);
    for (size_t k = 1; k < coef_.size(); ++k) out[k - 1] = static_cast<double>(k) * coef_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Complex> out(coef_);
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    std::vector<Complex> out(std::max(coef_.size(), rhs.coef_.size()), Complex(0.0));
    for (size_t k = 0; k < coef_.size(); ++k) out[k] += coef_[k];
    for (size_t k = 0; k < rhs.coef_.size(); ++k) out[k] += rhs.coef_[k];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const { return *this + (-rhs); }

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    if (isZero() || rhs.isZero()) return Polynomial{};
    std::vector<Complex> out(coef_.size() + rhs.coef_.size() - 1, Complex(0.0));
    for (size_t i = 0; i < coef_.size(); ++i)
        for (size_t j = 0; j < rhs.coef_.size(); ++j) out[i + j] += coef_[i] * rhs.coef_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(Complex s) const {
    std::vector<Complex> out(coef_);
    for (auto& c : out) c *= s;
    return Polynomial(std::move(out));
}

std::pair<Polynomial, Polynomial> Polynomial::divide(const Polynomial& p, const Polynomial& d) {
    if (d.isZero()) throw std::invalid_argument("divide: zero divisor");
    const int dd = d.degree();
    if (p.degree() < dd) return {Polynomial{}, p};
    std::vector<Complex> rem(p.coef_);
    std::vector<Complex> quot(p.coef_.size() - dd, Complex(0.0));
    const Complex lead = d.coef_.back();
    for (int k = static_cast<int>(rem.size()) - 1; k >= dd; --k) {
        const Complex q = rem[k] / lead;
        quot[k - dd] = q;
        for (int j = 0; j <= dd; ++j) rem[k - dd + j] -= q * d.coef_[j];
        rem[k] = Complex(0.0);  // cancel exactly
    }
    rem.resize(dd > 0 ? dd : 0);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

std::vector<Complex> roots(const Polynomial& p) {
    if (p.isZero()) throw std::invalid_argument("roots: zero polynomial");
    const int n = p.degree();
    if (n == 0) return {};
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    const Complex lead = p.coeff(n);
    for (int i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < n; ++i) companion(i, n - 1) = -p.coeff(i) / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, /*computeEigenvectors=*/false);
    std::vector<Complex> out(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) out[i] = solver.eigenvalues()(i);
    return out;
}

}  // namespace opuckit
