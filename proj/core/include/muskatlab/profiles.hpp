#pragma once

#include "muskatlab/grid.hpp"

namespace muskat {

// C^3 transition: 0 for t <= 0, 1 for t >= 1, strictly monotone between.
double smooth_step(double t);

// 1 on |x| <= inner, 0 on |x| >= outer, smooth between.
double plateau_bump(double x, double inner, double outer);

// Envelope field equal to 1 on |x| <= inner_frac * L and 0 beyond outer_frac * L.
RealField make_window(const Grid& g, double inner_frac, double outer_frac);

// Periodic profile whose derivative is exactly m on [-L/4, L/4]: slope m under
// a central plateau bump, compensated by a return slope of magnitude < m
// supported in |x| >= L/2 so the profile closes up over the period.
RealField make_windowed_linear(const Grid& g, double m);

// amplitude * exp(-(x/width)^2)
RealField make_gaussian(const Grid& g, double amplitude, double width);

// amplitude * exp(-(x/width)^2) * cos(k0 x)
RealField make_packet(const Grid& g, double amplitude, double width, double k0);

RealField make_sine(const Grid& g, double amplitude, double k);

}  // namespace muskat
