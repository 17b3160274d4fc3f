#include "opuckit/christoffel.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "opuckit/oracle.hpp"

namespace opuckit {

namespace {

constexpr double kPairTol = 1e-10;

bool sameZero(Complex a, Complex b) {
    return std::abs(a - b) <= kPairTol * std::max({1.0, std::abs(a), std::abs(b)});
}

// Determinant by partial-pivot elimination after scaling every column to
// unit max magnitude; returns the determinant of the SCALED matrix together
// with the log of the removed scale, so callers can decide what to reapply.
struct ScaledDet {
    Complex scaled{0.0};
    double logScale = 0.0;
    Complex value() const { return scaled * std::exp(logScale); }
};

ScaledDet detColumnScaled(std::vector<std::vector<Complex>> a) {
    const int n = static_cast<int>(a.size());
    ScaledDet r;
    r.scaled = Complex(1.0);
    for (int j = 0; j < n; ++j) {
        double s = 0.0;
        for (int i = 0; i < n; ++i) s = std::max(s, std::abs(a[i][j]));
        if (s == 0.0) return ScaledDet{Complex(0.0), 0.0};
        for (int i = 0; i < n; ++i) a[i][j] /= s;
        r.logScale += std::log(s);
    }
    for (int k = 0; k < n; ++k) {
        int piv = k;
        for (int i = k + 1; i < n; ++i)
            if (std::abs(a[i][k]) > std::abs(a[piv][k])) piv = i;
        if (std::abs(a[piv][k]) == 0.0) return ScaledDet{Complex(0.0), r.logScale};
        if (piv != k) {
            std::swap(a[piv], a[k]);
            r.scaled = -r.scaled;
        }
        for (int i = k + 1; i < n; ++i) {
            const Complex f = a[i][k] / a[k][k];
            for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
        r.scaled *= a[k][k];
    }
    return r;
}

std::vector<std::vector<Complex>> dropColumn(const std::vector<std::vector<Complex>>& a,
                                             int col) {
    std::vector<std::vector<Complex>> out(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        out[i].reserve(a[i].size() - 1);
        for (int j = 0; j < static_cast<int>(a[i].size()); ++j)
            if (j != col) out[i].push_back(a[i][j]);
    }
    return out;
}

// Direct cofactor expansion along row 0.  The returned polynomial is the
// determinant divided by the product of the column scales (a positive
// constant); logColumnScale reports what was divided out.
struct RawExpansion {
    Polynomial det;
    double termScale = 0.0;
    double logColumnScale = 0.0;
};

RawExpansion expandAlongRow0(const QMatrix& q) {
    const int cols = static_cast<int>(q.row0.size());
    std::vector<double> colScale(cols, 1.0);
    auto scaled = q.lower;
    double logScale = 0.0;
    for (int j = 0; j < cols; ++j) {
        double s = 0.0;
        for (const auto& row : scaled) s = std::max(s, std::abs(row[j]));
        colScale[j] = (s == 0.0) ? 1.0 : s;
        for (auto& row : scaled) row[j] /= colScale[j];
        logScale += std::log(colScale[j]);
    }
    RawExpansion r;
    r.logColumnScale = logScale;
    Polynomial acc;
    for (int j = 0; j < cols; ++j) {
        const ScaledDet minor = detColumnScaled(dropColumn(scaled, j));
        Complex cof = minor.value() / colScale[j];
        if (j % 2 == 1) cof = -cof;
        acc = acc + cof * q.row0[j];
        r.termScale = std::max(r.termScale, std::abs(cof) * q.row0[j].maxAbsCoeff());
    }
    r.det = acc;
    return r;
}

}  // namespace

SelfReciprocalFactor SelfReciprocalFactor::make(std::vector<Complex> zeros,
                                                const std::vector<double>& supportAngles) {
    if (zeros.empty() || zeros.size() % 2 != 0)
        throw std::invalid_argument("factor: need an even, nonempty zero multiset");
    for (const auto& z : zeros)
        if (std::abs(z) <= kPairTol) throw std::invalid_argument("factor: zero at the origin");
    std::sort(zeros.begin(), zeros.end(), [](Complex a, Complex b) {
        const double ra = std::abs(a), rb = std::abs(b);
        if (std::abs(ra - rb) > kPairTol) return ra < rb;
        return std::arg(a) < std::arg(b);
    });

    // Closure under z -> 1/conj(z): match non-unimodular zeros in pairs.
    std::vector<bool> used(zeros.size(), false);
    for (size_t i = 0; i < zeros.size(); ++i) {
        if (used[i] || std::abs(std::abs(zeros[i]) - 1.0) <= kPairTol) continue;
        const Complex partner = 1.0 / std::conj(zeros[i]);
        bool found = false;
        for (size_t j = 0; j < zeros.size(); ++j) {
            if (j == i || used[j]) continue;
            if (sameZero(zeros[j], partner)) {
                used[i] = used[j] = true;
                found = true;
                break;
            }
        }
        if (!found)
            throw std::invalid_argument("factor: unpaired zero off the unit circle");
    }

    SelfReciprocalFactor f;
    f.m_ = static_cast<int>(zeros.size()) / 2;
    f.zeros_ = zeros;
    for (const auto& z : zeros) {
        if (!f.groups_.empty() && sameZero(f.groups_.back().z, z))
            ++f.groups_.back().multiplicity;
        else
            f.groups_.push_back(ZeroGroup{z, 1});
    }

    // Phase that makes the monic product self-reciprocal with a real scale.
    Complex prod(1.0);
    for (const auto& z : zeros) prod *= z;
    const Complex phase = std::polar(1.0, -0.5 * std::arg(prod));
    Polynomial base({phase});
    for (const auto& z : zeros) base = base * Polynomial({-z, Complex(1.0)});

    double magnitude = 1.0;
    for (const auto& z : zeros) magnitude *= std::max(std::abs(z), 1.0);

    // Sign from the sampled support point of largest |G/zeta^m|, then a
    // nonnegativity sweep over every sample.
    if (supportAngles.empty()) throw std::invalid_argument("factor: empty support sampling");
    std::vector<double> h(supportAngles.size());
    double best = 0.0;
    size_t bestIdx = 0;
    for (size_t i = 0; i < supportAngles.size(); ++i) {
        const Complex zeta = std::polar(1.0, supportAngles[i]);
        const Complex v = base(zeta) * std::polar(1.0, -f.m_ * supportAngles[i]);
        if (std::abs(v.imag()) > 1e-8 * (1.0 + std::abs(v)))
            throw std::runtime_error("factor: G/zeta^m not real on the circle");
        h[i] = v.real();
        if (std::abs(h[i]) > best) {
            best = std::abs(h[i]);
            bestIdx = i;
        }
    }
    if (best == 0.0) throw std::invalid_argument("factor: vanishes on the sampled support");
    const double sign = h[bestIdx] > 0.0 ? 1.0 : -1.0;
    for (const double hi : h)
        if (sign * hi < -1e-9 * best)
            throw std::invalid_argument("factor: changes sign on the support");

    f.leading_ = sign * magnitude;
    f.poly_ = base * Complex(f.leading_);

    const Polynomial rev = f.poly_.conjReverse(2 * f.m_);
    const Polynomial diff = rev - f.poly_;
    if (diff.maxAbsCoeff() > 1e-10 * f.poly_.maxAbsCoeff())
        throw std::runtime_error("factor: self-reciprocality lost");
    return f;
}

bool SelfReciprocalFactor::hasRepeatedZero() const {
    for (const auto& g : groups_)
        if (g.multiplicity > 1) return true;
    return false;
}

AdmissibleSet AdmissibleSet::floorSet(int m) {
    if (m < 1) throw std::invalid_argument("floorSet: m must be >= 1");
    AdmissibleSet s;
    s.m = m;
    for (int j = 0; j <= 2 * m; ++j) s.polys.push_back(Polynomial::monomial(j / 2));
    s.condition = AdmissibleCondition::DegreeBelowIndex;
    s.validate();
    return s;
}

AdmissibleSet AdmissibleSet::ceilSet(int m) {
    if (m < 1) throw std::invalid_argument("ceilSet: m must be >= 1");
    AdmissibleSet s;
    s.m = m;
    for (int j = 0; j <= 2 * m; ++j) s.polys.push_back(Polynomial::monomial((j + 1) / 2));
    s.condition = AdmissibleCondition::VanishAtOrigin;
    s.validate();
    return s;
}

bool AdmissibleSet::satisfies(AdmissibleCondition c) const {
    switch (c) {
        case AdmissibleCondition::DegreeBelowIndex:
            for (int j = 1; j <= 2 * m; ++j)
                if (polys[j].degree() >= j) return false;
            return true;
        case AdmissibleCondition::DegreeBelowHalf:
            for (int j = 1; j <= 2 * m - 1; ++j)
                if (polys[j].degree() >= m) return false;
            return true;
        case AdmissibleCondition::VanishAtOrigin:
            for (int j = 1; j <= 2 * m; ++j)
                if (std::abs(polys[j].coeff(0)) > 1e-12 * polys[j].maxAbsCoeff()) return false;
            return true;
    }
    return false;
}

void AdmissibleSet::validate() const {
    if (m < 1) throw std::invalid_argument("admissible set: m must be >= 1");
    if (static_cast<int>(polys.size()) != 2 * m + 1)
        throw std::invalid_argument("admissible set: needs 2m+1 polynomials");
    const Polynomial& p0 = polys.front();
    if (p0.degree() != 0 || std::abs(p0.coeff(0) - 1.0) > 1e-12)
        throw std::invalid_argument("admissible set: p_0 must be 1");
    const Polynomial& last = polys.back();
    if (last.degree() != m || std::abs(last.coeff(m) - 1.0) > 1e-12)
        throw std::invalid_argument("admissible set: p_2m must be z^m");
    for (int j = 0; j <= 2 * m; ++j) {
        if (polys[j].isZero()) throw std::invalid_argument("admissible set: zero polynomial");
        const int lo = std::max(0, j - m), hi = std::min(j, m);
        for (int k = 0; k <= polys[j].degree(); ++k)
            if (std::abs(polys[j].coeff(k)) > 1e-12 * polys[j].maxAbsCoeff() &&
                (k < lo || k > hi))
                throw std::invalid_argument("admissible set: coefficient outside the band");
    }
    if (!satisfies(condition))
        throw std::invalid_argument("admissible set: declared condition does not hold");
}

AdmissibleSet hat(const AdmissibleSet& P) {
    AdmissibleSet out;
    out.m = P.m;
    for (int j = 0; j < static_cast<int>(P.polys.size()); ++j) {
        std::vector<Complex> c(static_cast<size_t>(j) + 1, Complex(0.0));
        for (int k = 0; k <= P.polys[j].degree(); ++k)
            c[j - k] = std::conj(P.polys[j].coeff(k));
        out.polys.emplace_back(std::move(c));
    }
    for (AdmissibleCondition c :
         {AdmissibleCondition::DegreeBelowIndex, AdmissibleCondition::DegreeBelowHalf,
          AdmissibleCondition::VanishAtOrigin}) {
        out.condition = c;
        if (out.satisfies(c)) break;
    }
    out.validate();
    return out;
}

QMatrix buildQ(const OpucTable& t, const AdmissibleSet& P, const SelfReciprocalFactor& G, int n,
               Complex w) {
    const int m = P.m;
    if (G.m() != m) throw std::invalid_argument("buildQ: factor degree does not match the set");
    if (t.maxDegree() < n + 2 * m) throw std::invalid_argument("buildQ: table too shallow");
    QMatrix q;
    for (int j = 0; j <= 2 * m; ++j)
        q.row0.push_back(P.polys[j] * kernelPoly(t, n + 2 * m - j, w).asPoly);
    for (const auto& group : G.zeroGroups()) {
        std::vector<Polynomial> deriv = q.row0;
        for (int r = 0; r < group.multiplicity; ++r) {
            std::vector<Complex> row(q.row0.size());
            for (size_t j = 0; j < deriv.size(); ++j) {
                row[j] = deriv[j](group.z);
                deriv[j] = deriv[j].derivative();
            }
            q.lower.push_back(std::move(row));
        }
    }
    return q;
}

namespace {

TransformResult transformDirect(const OpucTable& t, const AdmissibleSet& P,
                                const SelfReciprocalFactor& G, int n, Complex w) {
    const QMatrix q = buildQ(t, P, G, n, w);
    RawExpansion raw = expandAlongRow0(q);

    TransformResult res;
    res.rawDet = raw.det;
    res.degenerate = raw.det.maxAbsCoeff() <= 1e-10 * raw.termScale;

    {
        const int mm = 2 * G.m();
        std::vector<std::vector<Complex>> d0(q.lower.size()), dm(q.lower.size());
        for (size_t i = 0; i < q.lower.size(); ++i) {
            d0[i].assign(q.lower[i].begin() + 1, q.lower[i].end());
            dm[i].assign(q.lower[i].begin(), q.lower[i].begin() + mm);
        }
        res.delta0 = detColumnScaled(std::move(d0)).value();
        res.deltaM = detColumnScaled(std::move(dm)).value();
    }

    if (res.degenerate) return res;

    auto [quot, rem] = Polynomial::divide(raw.det, G.asPoly());
    if (rem.maxAbsCoeff() > 1e-8 * raw.det.maxAbsCoeff())
        throw std::runtime_error("transformKernel: deflation remainder above tolerance");
    res.deflated = quot;
    return res;
}

Polynomial normalizeAgainstMoments(const Polynomial& p, const MomentList& nu) {
    if (nu.maxOrder() < p.degree())
        throw std::invalid_argument("transformKernel: nu moments too shallow to normalize");
    Complex denom(0.0);
    for (int k = 0; k <= p.degree(); ++k) denom += p.coeff(k) * nu.value(-k);
    if (std::abs(denom) == 0.0)
        throw std::runtime_error("transformKernel: reproducing normalization degenerate");
    return p * (1.0 / denom);
}

}  // namespace

TransformResult transformKernel(const OpucTable& t, const AdmissibleSet& P,
                                const SelfReciprocalFactor& G, int n, Complex w,
                                const MomentList& nuMoments) {
    const double aw = std::abs(w);
    if (aw > 0.0 && aw < 0.1) {
        // Reflected evaluation: the direct determinant degrades as C_n(w bar)
        // collapses like |w|^{n+2m} below the cancellation floor.
        const Complex big = 1.0 / std::conj(w);
        TransformResult res = transformDirect(t, hat(P), G, n, big);
        if (!res.degenerate)
            res.kernelNu = normalizeAgainstMoments(res.deflated.conjReverse(n), nuMoments);
        return res;
    }
    TransformResult res = transformDirect(t, P, G, n, w);
    if (!res.degenerate) res.kernelNu = normalizeAgainstMoments(res.deflated, nuMoments);
    return res;
}

std::pair<Complex, Complex> minors(const OpucTable& t, const AdmissibleSet& P,
                                   const SelfReciprocalFactor& G, int n, Complex w) {
    if (G.hasRepeatedZero())
        throw std::domain_error("minors: repeated zeros are not supported here");
    const QMatrix q = buildQ(t, P, G, n, w);
    const int mm = 2 * G.m();
    std::vector<std::vector<Complex>> d0(q.lower.size()), dm(q.lower.size());
    for (size_t i = 0; i < q.lower.size(); ++i) {
        d0[i].assign(q.lower[i].begin() + 1, q.lower[i].end());
        dm[i].assign(q.lower[i].begin(), q.lower[i].begin() + mm);
    }
    return {detColumnScaled(std::move(d0)).value(), detColumnScaled(std::move(dm)).value()};
}

}  // namespace opuckit
