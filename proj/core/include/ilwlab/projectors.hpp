#pragma once

#include "ilwlab/field.hpp"

namespace ilw {

/// Littlewood-Paley bump eta: 1 on [0, 5/4], 0 on [8/5, inf), polynomial
/// smoothstep on the transition. Even extension is taken via |xi| by callers.
double lp_bump(double r);

/// Dyadic bump phi_j: phi_0(xi) = eta(|xi|),
/// phi_j(xi) = eta(|xi|/2^j) - eta(|xi|/2^(j-1)) for j >= 1. Values in [0,1].
double lp_symbol(int j, double xi);

/// Littlewood-Paley projector Q_j (symbol phi_j at the physical frequency).
SpectralField lp_project(const SpectralField& f, int j);

enum class SharpKind {
  plus,      // keep modes n >= 1
  minus,     // keep modes n <= -1
  nonzero,   // drop the mean mode
  zero,      // keep only the mean mode
  cutoff,    // keep |n| <= k
};

SpectralField sharp_project(const SpectralField& f, SharpKind kind, int k = 0);

enum class SmoothKind {
  hi,        // 1 - eta(|xi|)
  HI,        // 1 - eta(|xi|/4)
  lo,        // eta(|xi|)
  LO,        // eta(|xi|/4)
  plus_hi,   // P+ then hi
  plus_HI,   // P+ then HI
  minus_hi,  // P- then hi
};

SpectralField smooth_project(const SpectralField& f, SmoothKind kind);

}  // namespace ilw
