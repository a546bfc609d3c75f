#pragma once

#include <vector>

#include "scband/profile.hpp"

namespace scband {

// Discretized second-variation operator L = -Laplacian + potential on a
// circle of the given circumference; the potential holds
// (1/2)(Sc(Y) - Sc(V|Y) - |curv|^2) on a uniform grid y_i = i L / N.
struct StabilityProblem {
  double circumference;
  std::vector<double> potential;
};

struct StabilityStep {
  double lambda0;           // lowest eigenvalue of L
  std::vector<double> phi;  // positive eigenfunction, normalized to max = 1
  Profile phi_profile;      // same data as a sampled profile on [0, L]
};

// Lowest eigenpair of L with the standard second-difference Laplacian on the
// circle (dense symmetric eigensolve of the circulant-structured matrix).
StabilityStep stability_step(const StabilityProblem& problem);

struct SymmetrizationReport {
  double min_sc;             // min over the grid of Sc(dy^2 + phi^2 dt^2)
  double sigma;              // the claimed lower bound
  bool holds;                // min_sc >= sigma - tol
  double identity_residual;  // max |Sc_fd - (2 lambda0 - 2 potential)|
};

// Scalar curvature of the next-step metric dy^2 + phi(y)^2 dt^2 over the
// circle is -2 phi''/phi; checked against sigma and against the eigenvalue
// identity -2 phi''/phi = 2(lambda0 - potential).
SymmetrizationReport verify_symmetrization_invariant(
    const StabilityProblem& problem, const StabilityStep& step, double sigma,
    double tol = 1e-6);

}  // namespace scband
