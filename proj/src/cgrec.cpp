#include "opuckit/cgrec.hpp"

#include <cmath>
#include <stdexcept>

#include "opuckit/cg_maps.hpp"

namespace opuckit {

double CGParams::xi(int n, XiConvention conv) const {
    if (n < 0 || n > size()) throw std::out_of_range("xi: index out of range");
    double v = xi0;
    for (int j = 1; j <= n; ++j)
        v *= (conv == XiConvention::Recurrence ? 2.0 : 1.0) * (1.0 - g[j - 1]);
    return v;
}

CGParams cgFromAlpha(std::span<const Complex> alphas, double totalMass) {
    CGParams p;
    p.xi0 = totalMass;
    p.tau.push_back(Complex(1.0));
    for (const Complex& a : alphas) {
        const CGStep s = cgStep(p.tau.back(), a);
        p.c.push_back(s.c);
        p.g.push_back(s.g);
        p.tau.push_back(s.tauNext);
    }
    return p;
}

CGParams cgFromAlpha(const MeasureModel& m, int N) {
    if (N < 1) throw std::invalid_argument("cgFromAlpha: N must be >= 1");
    return cgFromAlpha(m.alphas(N), m.totalMass());
}

std::vector<Complex> alphaFromCG(std::span<const double> c, std::span<const double> g, int N) {
    if (N > static_cast<int>(c.size()) || N > static_cast<int>(g.size()))
        throw std::invalid_argument("alphaFromCG: not enough data");
    std::vector<Complex> out;
    Complex tau(1.0);
    for (int n = 1; n <= N; ++n) {
        const AlphaStep s = alphaStep(tau, c[n - 1], g[n - 1]);
        out.push_back(s.alpha);
        tau = s.tauNext;
    }
    return out;
}

std::vector<Polynomial> rSequence(std::span<const double> c, std::span<const double> g, int N) {
    if (static_cast<int>(c.size()) < N || static_cast<int>(g.size()) < N)
        throw std::invalid_argument("rSequence: not enough (c,g) data");
    std::vector<Polynomial> R;
    R.push_back(Polynomial::one());
    if (N == 0) return R;
    auto band = [&](int n1) {  // (1+ic_{n1}) z + (1-ic_{n1})
        const Complex ic(0.0, c[n1 - 1]);
        return Polynomial({1.0 - ic, 1.0 + ic});
    };
    R.push_back(band(1));
    const Polynomial z = Polynomial::monomial(1);
    for (int n = 1; n < N; ++n) {
        const double d = (1.0 - g[n - 1]) * g[n];
        R.push_back(band(n + 1) * R[n] - (4.0 * d) * (z * R[n - 1]));
    }
    return R;
}

std::vector<Polynomial> rSequence(const MeasureModel& m, int N) {
    std::vector<double> c, g;
    for (int n = 1; n <= N; ++n) {
        const auto [cn, gn] = m.cg(n);
        c.push_back(cn);
        g.push_back(gn);
    }
    return rSequence(c, g, N);
}

namespace {

// 2x2 .. small dense solve with partial pivoting and column scaling.
std::vector<Complex> solveDense(std::vector<std::vector<Complex>> a, std::vector<Complex> rhs) {
    const int n = static_cast<int>(a.size());
    std::vector<double> colScale(n, 1.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s = std::max(s, std::abs(a[i][j]));
        if (s == 0.0) throw std::runtime_error("connection: singular collocation system");
        colScale[j] = s;
        for (int i = 0; i < n; ++i) a[i][j] /= s;
    }
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (std::abs(a[piv][k]) < 1e-12)
            throw std::runtime_error("connection: singular collocation system");
        std::swap(a[piv], a[k]);
        std::swap(rhs[piv], rhs[k]);
        for (int i = k + 1; i < n; ++i) {
            const Complex f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    std::vector<Complex> x(n);
    for (int k = n - 1; k >= 0; --k) {
        Complex acc = rhs[k];
        for (int j = k + 1; j < n; ++j) acc -= a[k][j] * x[j];
        x[k] = acc / a[k][k];
    }
    for (int j = 0; j < n; ++j) x[j] /= colScale[j];
    return x;
}

}  // namespace

ConnectionCoeffs connectionCoeffs(const MeasureModel& m, const SelfReciprocalFactor& G,
                                  int nMax) {
    const int mm = G.m();
    if (G.hasRepeatedZero() && mm != 1)
        throw std::domain_error("connection: repeated zeros supported for m = 1 only");
    const int N = nMax + 2 * mm;
    const std::vector<Polynomial> R = rSequence(m, N);
    const AdmissibleSet P = AdmissibleSet::floorSet(mm);

    ConnectionCoeffs cc;
    cc.m = mm;
    for (int n = 0; n <= nMax; ++n) {
        const int top = n + 2 * mm;
        std::vector<std::vector<Complex>> A;
        std::vector<Complex> rhs;
        for (const auto& group : G.zeroGroups()) {
            // Value row, then derivative rows up to the zero's multiplicity.
            for (int r = 0; r < group.multiplicity; ++r) {
                std::vector<Complex> row(2 * mm);
                for (int j = 1; j <= 2 * mm; ++j) {
                    Polynomial term = P.polys[j] * R[top - j];
                    for (int d = 0; d < r; ++d) term = term.derivative();
                    row[j - 1] = term(group.z);
                }
                Polynomial lead = R[top];
                for (int d = 0; d < r; ++d) lead = lead.derivative();
                A.push_back(std::move(row));
                rhs.push_back(-lead(group.z));
            }
        }
        cc.a.push_back(solveDense(std::move(A), std::move(rhs)));
    }

    // gamma recursion seeded from the value of the connection formula at 0.
    std::vector<double> c;
    for (int n = 1; n <= N; ++n) c.push_back(m.cg(n).first);
    Complex gamma0(1.0);
    for (int j = 1; j <= 2 * mm; ++j) gamma0 *= Complex(1.0, c[j - 1]);
    gamma0 /= std::conj(G.asPoly()(Complex(0.0)));
    cc.gamma.push_back(gamma0);
    for (int n = 1; n <= nMax; ++n) {
        const int bigN = n + 2 * mm;
        const Complex icN(0.0, c[bigN - 1]);
        const Complex icN1(0.0, c[bigN - 2]);
        const Complex ratio =
            0.5 * ((1.0 - icN1) * ((1.0 - icN) + cc.a[n][0]) / ((1.0 - icN1) + cc.a[n - 1][0]) +
                   (1.0 + icN));
        cc.gamma.push_back(cc.gamma[n - 1] * ratio);
    }
    return cc;
}

TransformedCG transformedCG(const MeasureModel& m, const SelfReciprocalFactor& G, int nMax) {
    const int mm = G.m();
    const ConnectionCoeffs cc = connectionCoeffs(m, G, nMax);
    const CGParams base = cgFromAlpha(m.alphas(nMax + 2 * mm), m.totalMass());

    // xi_N + sum_j a_{2j-1} xi_{N-2j+1} + sum_j a_{2j} xi_{N-2j} at row n.
    auto bracket = [&](int n) {
        const int top = n + 2 * mm;
        Complex acc(base.xi(top));
        for (int j = 1; j <= mm; ++j) {
            acc += cc.a[n][2 * j - 2] * base.xi(top - 2 * j + 1);
            acc += cc.a[n][2 * j - 1] * base.xi(top - 2 * j);
        }
        return acc;
    };

    TransformedCG out;
    for (int n = 1; n <= nMax; ++n) {
        const int bigN = n + 2 * mm;
        const Complex icN(0.0, base.cAt(bigN));
        const Complex icN1(0.0, base.cAt(bigN - 1));
        const Complex gammaRatio = cc.gamma[n - 1] / cc.gamma[n];
        const Complex cNu =
            Complex(0.0, 0.5) * gammaRatio *
            ((1.0 - icN1) * ((1.0 - icN) + cc.a[n][0]) / ((1.0 - icN1) + cc.a[n - 1][0]) -
             (1.0 + icN));
        // In the Recurrence xi convention the consecutive brackets sit one
        // power of 2 apart, hence the extra 1/2 against the xi ratio.
        const Complex gNu = 1.0 - 0.5 * gammaRatio * bracket(n) / bracket(n - 1);
        if (std::abs(cNu.imag()) > 1e-9 * (1.0 + std::abs(cNu)) ||
            std::abs(gNu.imag()) > 1e-9 * (1.0 + std::abs(gNu)))
            throw std::runtime_error("transformedCG: non-real parameters, convention violated");
        out.c.push_back(cNu.real());
        out.g.push_back(gNu.real());
    }
    return out;
}

}  // namespace opuckit
