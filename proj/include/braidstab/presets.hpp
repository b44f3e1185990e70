#ifndef BRAIDSTAB_PRESETS_HPP
#define BRAIDSTAB_PRESETS_HPP

#include <map>
#include <string>

#include "braidstab/hamiltonian.hpp"

namespace braidstab {

using ParamMap = std::map<std::string, double>;

// Smooth compactly supported bump, value 1 at the centre, 0 for |d| >= radius.
double bump_profile(double dist, double radius);
double bump_profile_derivative(double dist, double radius);

// Quintic smoothstep, C^2 at both ends.
double smoothstep5(double u);
double smoothstep5_derivative(double u);

// Named presets, all with analytic gradients:
//   rotation         disk, H = c (r^2 - 1)/2, admissible with slope c
//   quadratic        disk/plane, H = c r^2 / 2 (pure quadratic, not admissible)
//   shear            torus, H = amp cos(2 pi y) / (2 pi)
//   pendulum         torus, H = y^2/2 + (cos(2 pi x) - 1)/(2 pi)^2, zero-mean
//   forced-pendulum  pendulum + amp sin(2 pi t) sin(2 pi x)/(2 pi)
//   bump             disk, amp * bump at (cx, cy) with radius R (perturbation profile)
//   bump-perturbed   rotation + bump
//   resonant-rotation disk twist profile with a 3-fold forcing term whose
//                    time-1 map is exactly (radial twist map) o (3-fold kick)
TimePeriodicHamiltonian make_preset(const std::string& name, const ParamMap& params = {});

// The two factor Hamiltonians of the resonant-rotation preset; the preset's
// time-1 map equals flow(A) o flow(B).
TimePeriodicHamiltonian resonant_rotation_twist_part(const ParamMap& params);
TimePeriodicHamiltonian resonant_rotation_kick_part(const ParamMap& params);

// Angular speed of the radial twist at radius r (clockwise for positive values).
double resonant_rotation_omega(double r, const ParamMap& params);

} // namespace braidstab

#endif
