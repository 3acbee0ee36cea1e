#pragma once

#include <functional>
#include <vector>

namespace diracsol {

// Adaptive Simpson integral of f over [a, b]. `tol` is the absolute
// tolerance on the whole interval; subdivision stops at `max_depth`
// halvings, after which the local Richardson estimate is accepted as is.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double tol = 1e-10, int max_depth = 40);

// Trapezoid rule over tabulated samples (x strictly increasing).
double integrate_samples(const std::vector<double>& x,
                         const std::vector<double>& y);

} // namespace diracsol
