#include "diracsol/special.hpp"

#include <cmath>
#include <string>

#include "diracsol/errors.hpp"

namespace diracsol {

namespace {
void check_args(const char* who, int n, double alpha, double x) {
    if (n < 0)
        throw DomainError(std::string(who) + ": degree must be >= 0, got " +
                          std::to_string(n));
    if (!std::isfinite(alpha) || !std::isfinite(x))
        throw DomainError(std::string(who) + ": non-finite argument");
}
} // namespace

double laguerre(int n, double alpha, double x) {
    check_args("laguerre", n, alpha, x);
    if (n == 0) return 1.0;
    double lm1 = 1.0;            // L_0
    double l = 1.0 + alpha - x;  // L_1
    for (int k = 1; k < n; ++k) {
        const double lp1 =
            ((2.0 * k + 1.0 + alpha - x) * l - (k + alpha) * lm1) / (k + 1.0);
        lm1 = l;
        l = lp1;
    }
    return l;
}

double laguerre_derivative(int n, double alpha, double x) {
    check_args("laguerre_derivative", n, alpha, x);
    if (n == 0) return 0.0;
    return -laguerre(n - 1, alpha + 1.0, x);
}

double jacobi(int n, double a, double b, double x) {
    if (n < 0)
        throw DomainError("jacobi: degree must be >= 0, got " +
                          std::to_string(n));
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x))
        throw DomainError("jacobi: non-finite argument");
    if (n == 0) return 1.0;
    double pm1 = 1.0;                                  // P_0
    double p = (a + 1.0) + (a + b + 2.0) * (x - 1.0) / 2.0; // P_1
    for (int k = 2; k <= n; ++k) {
        const double s = 2.0 * k + a + b;
        const double c1 = 2.0 * k * (k + a + b) * (s - 2.0);
        const double c2 = (s - 1.0) * (s * (s - 2.0) * x + a * a - b * b);
        const double c3 = 2.0 * (k + a - 1.0) * (k + b - 1.0) * s;
        const double pp1 = (c2 * p - c3 * pm1) / c1;
        pm1 = p;
        p = pp1;
    }
    return p;
}

double jacobi_derivative(int n, double a, double b, double x) {
    if (n < 0)
        throw DomainError("jacobi_derivative: degree must be >= 0, got " +
                          std::to_string(n));
    if (n == 0) return 0.0;
    return 0.5 * (n + a + b + 1.0) * jacobi(n - 1, a + 1.0, b + 1.0, x);
}

} // namespace diracsol
