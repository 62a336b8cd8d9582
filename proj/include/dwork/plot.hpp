// plot.hpp
// Sign-field sampling of the two curve branches F+ = G + phi H and
// F- = G - phi H over a real (sigma, tau) window, emitted as CSV for external
// contour plotting.  At psi^5 = 1 the six real nodes are appended as a point
// layer.
#pragma once

#include "dwork/rat.hpp"

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dwork::plot {

struct InvalidGrid : std::runtime_error {
    explicit InvalidGrid(const std::string& what) : std::runtime_error(what) {}
};

// The six real nodes of the parameter curve at psi^5 = 1, as (sigma, tau)
// doubles: (g,g), (-g,-g), (g,h), (-g,h), (h,g), (h,-g) with g = (1+sqrt5)/2
// and h = (3-sqrt5)/2.
std::vector<std::pair<double, double>> conifold_node_points();

// N x N grid over [-window, window]^2 with columns
// sigma,tau,sign_fplus,sign_fminus.  phi is taken real (the nonnegative root
// of 32/p - 3/4) when that square is nonnegative; otherwise both signs are
// emitted as 0 and a warning comment is included.  At p = 0 the signs of the
// limiting branches +-H are emitted.  At p = 1 the node point layer is
// appended as comment lines "# node: sigma,tau".  Throws InvalidGrid for
// n < 2 or window <= 0.
std::string plot_curves(const Rat& psi5, int n, const Rat& window);

} // namespace dwork::plot
