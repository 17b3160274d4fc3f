#include "opuckit/opuc.hpp"

#include <cmath>
#include <stdexcept>

namespace opuckit {

OpucTable buildOpucFromAlphas(std::span<const Complex> alphas, double totalMass) {
    if (!(totalMass > 0.0)) throw std::invalid_argument("buildOpuc: total mass must be > 0");
    const int N = static_cast<int>(alphas.size());
    OpucTable t;
    t.totalMass = totalMass;
    t.monic.reserve(N + 1);
    t.reversed.reserve(N + 1);
    t.kappa.reserve(N + 1);
    t.tau.reserve(N + 1);
    t.monic.push_back(Polynomial::one());
    t.reversed.push_back(Polynomial::one());
    t.kappa.push_back(1.0 / std::sqrt(totalMass));
    t.tau.push_back(Complex(1.0));
    const Polynomial z = Polynomial::monomial(1);
    for (int n = 1; n <= N; ++n) {
        const Complex a = alphas[n - 1];
        if (!(std::abs(a) < 1.0))
            throw std::domain_error("buildOpuc: invalid measure, |alpha| >= 1");
        t.monic.push_back(z * t.monic[n - 1] - std::conj(a) * t.reversed[n - 1]);
        t.reversed.push_back(t.reversed[n - 1] - a * (z * t.monic[n - 1]));
        t.kappa.push_back(t.kappa[n - 1] / std::sqrt(1.0 - std::norm(a)));
        t.tau.push_back((t.tau[n - 1] - std::conj(a)) / (1.0 - t.tau[n - 1] * a));
    }
    return t;
}

OpucTable buildOpuc(const MeasureModel& m, int N) {
    if (N < 0) throw std::invalid_argument("buildOpuc: negative degree");
    return buildOpucFromAlphas(m.alphas(N), m.totalMass());
}

}  // namespace opuckit
