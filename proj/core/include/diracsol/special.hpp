#pragma once

namespace diracsol {

// Generalized Laguerre polynomial L_n^alpha(x) by the three-term
// recurrence; exact for polynomial degree, stable for the x >= 0,
// alpha > -1 range used here. Throws DomainError for n < 0 or non-finite
// arguments.
double laguerre(int n, double alpha, double x);

// d/dx L_n^alpha(x) = -L_{n-1}^{alpha+1}(x); zero for n == 0.
double laguerre_derivative(int n, double alpha, double x);

// Jacobi polynomial P_n^{(a,b)}(x) by the three-term recurrence.
double jacobi(int n, double a, double b, double x);

// d/dx P_n^{(a,b)}(x) = (n+a+b+1)/2 * P_{n-1}^{(a+1,b+1)}(x).
double jacobi_derivative(int n, double a, double b, double x);

} // namespace diracsol
