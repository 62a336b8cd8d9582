// lines.hpp
// Symbolic verification of the line families on the pencil of quintic
// threefolds sum x_j^5 - 5 psi x_1..x_5: membership conditions for a general
// line, the scaling chain that reduces them to the constraint F(sigma,tau)=0,
// the factorization F = -psi^5 F+ F-, the special lines with a degenerate
// coordinate, and the permutation action on the parameter space.
#pragma once

#include "dwork/polyops.hpp"

namespace dwork::lines {

// sum x_j^5 - 5 psi x_1 x_2 x_3 x_4 x_5 in Var::x1..x5, Var::psi.
MPoly quintic();

// The six conditions on (b,c,d,r,s,t,psi) for the line
// (u, v, bu+rv, cu+sv, du+tv) to lie on the quintic.
std::array<MPoly, 6> membership_rows();

// G, H in sigma, tau and F in sigma, tau, P (with P standing for psi^5).
MPoly g_poly();
MPoly h_poly();
MPoly f_poly();

// Each check throws IdentityFailed (or a more specific exception) on failure.
void check_membership_rows();       // rows re-derived from the quintic
void check_factorization();         // 4F + 4PG^2 - (128-3P)H^2 = 0 and F = -P F+ F-
void check_rho_symmetry();          // G/(st)^2, H/(st)^2 in terms of rho = 1/(st)
void check_scaling_chain();         // transformed system, delta^5/kappa^5/psi~, F
void check_van_geemen();            // the lines (u, v, bu, cu+wv, -w^2(cu-v))
void check_s5_table();              // the four generator rows acting on (G,H)
unsigned s5_group_order();          // closure of the four parameter maps
void check_intersection_points();   // the 17 common points of F+ = F- = 0
void check_node_local_form();       // ordinary double point at (1,1)
void check_no_extra_singularities();// resultant scan at five rational phi

} // namespace dwork::lines
