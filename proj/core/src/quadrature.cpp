#include "diracsol/quadrature.hpp"

#include <cmath>
#include <string>

#include "diracsol/errors.hpp"

namespace diracsol {

namespace {

double simpson_step(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adapt(const std::function<double(double)>& f, double a, double fa,
             double b, double fb, double m, double fm, double whole,
             double tol, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson_step(a, fa, m, fm, flm);
    const double right = simpson_step(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return adapt(f, a, fa, m, fm, lm, flm, left, 0.5 * tol, depth - 1) +
           adapt(f, m, fm, b, fb, rm, frm, right, 0.5 * tol, depth - 1);
}

} // namespace

double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol, int max_depth) {
    if (!(b > a))
        throw DomainError("integrate: need b > a");
    if (!(tol > 0.0))
        throw DomainError("integrate: tolerance must be positive");
    const double m = 0.5 * (a + b);
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(m);
    const double whole = simpson_step(a, fa, b, fb, fm);
    return adapt(f, a, fa, b, fb, m, fm, whole, tol, max_depth);
}

double integrate_samples(const std::vector<double>& x,
                         const std::vector<double>& y) {
    if (x.size() != y.size())
        throw DomainError("integrate_samples: size mismatch");
    if (x.size() < 2)
        throw DomainError("integrate_samples: need at least two samples");
    double total = 0.0;
    for (std::size_t i = 1; i < x.size(); ++i) {
        const double h = x[i] - x[i - 1];
        if (!(h > 0.0))
            throw DomainError(
                "integrate_samples: abscissae must be strictly increasing");
        total += 0.5 * h * (y[i] + y[i - 1]);
    }
    return total;
}

} // namespace diracsol
