#include "opuckit/qseries.hpp"

#include <cmath>
#include <stdexcept>

namespace opuckit::qf {

namespace {
// smallest K with q^K < 1e-17
int tailCut(double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
    return static_cast<int>(std::ceil(std::log(1e-17) / std::log(q)));
}
}  // namespace

Complex qPochhammer(Complex a, double q, int n) {
    Complex prod(1.0);
    Complex aq = a;
    for (int j = 0; j < n; ++j) {
        prod *= (1.0 - aq);
        aq *= q;
    }
    return prod;
}

Complex qPochhammerInf(Complex a, double q) { return qPochhammer(a, q, tailCut(q)); }

Complex phi21(Complex a, Complex b, Complex c, double q, Complex z) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
    Complex sum(1.0);
    Complex term(1.0);
    Complex aq = a, bq = b, cq = c;
    double qq = q;
    int quiet = 0;
    for (int n = 0; n < 1000; ++n) {
        term *= (1.0 - aq) * (1.0 - bq) / ((1.0 - cq) * (1.0 - qq)) * z;
        sum += term;
        aq *= q;
        bq *= q;
        cq *= q;
        qq *= q;
        if (std::abs(term) <= 1e-18 * (1.0 + std::abs(sum))) {
            if (++quiet >= 2) return sum;
        } else {
            quiet = 0;
        }
    }
    throw std::runtime_error("phi21: series did not converge");
}

Complex pochhammer(Complex x, int k) {
    Complex prod(1.0);
    for (int j = 0; j < k; ++j) prod *= (x + static_cast<double>(j));
    return prod;
}

Complex f21Terminating(int n, Complex b, Complex c, Complex x) {
    Complex sum(1.0);
    Complex term(1.0);
    for (int k = 0; k < n; ++k) {
        const double mk = static_cast<double>(-n + k);
        term *= mk * (b + static_cast<double>(k)) /
                ((c + static_cast<double>(k)) * static_cast<double>(k + 1)) * x;
        sum += term;
    }
    return sum;
}

}  // namespace opuckit::qf
