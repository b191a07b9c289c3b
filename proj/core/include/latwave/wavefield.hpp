#pragma once

// Linear propagator and paraboloid extension operator for atomic data,
// evaluated by direct summation or on uniform grids (discrete Fourier
// synthesis), plus the rescaling bridge between the two pictures.
//
// Phase conventions, kept explicit throughout:
//   propagator   u(x,t) = lambda^{-d/2} sum exp(+2 pi i k.x - i |2 pi k|^2 t) phi(k)
//   extension    Ef(x,t) = sum c_xi exp(-2 pi i (xi.x + |xi|^2 t))        [two_pi]
//                Ef(x,t) = sum c_xi exp(-i (xi.x + |xi|^2 t))             [plain]
// With h(xi) = lambda^{-d/2} phi(N1 xi) on the N1-times-finer lattice both
// printed forms of the bridge identity hold:
//   u(x,t) = E_plain  h(-2 pi N1 x, (2 pi)^2 N1^2 t)
//   u(x,t) = E_two_pi h(-N1 x,      2 pi N1^2 t)

#include <complex>
#include <vector>

#include "latwave/spectral.hpp"

namespace latwave {

struct SpaceTimePoint {
  double t = 0.0;
  std::array<double, kMaxDim> x{};
};

enum class PhaseConvention { two_pi, plain };

// direct propagator sum at arbitrary points, in sorted-atom order with
// compensated accumulation
std::vector<cplx> evolve(const SpectralData& data, std::span<const SpaceTimePoint> points);
cplx evolve_at(const SpectralData& data, const SpaceTimePoint& p);

struct SpaceTimeGrid {
  RescaledTorus torus;
  std::vector<double> times;
  std::vector<int> dims;        // samples per spatial axis
  std::vector<cplx> values;     // time-major, then row-major over space

  std::size_t slice_stride() const;
  cplx at(std::size_t time_idx, std::span<const int> coords) const;
  // grid point location: x_j = (axis length) * n_j / dims_j
  std::array<double, kMaxDim> point(std::span<const int> coords) const;
};

// fast propagator path: per time slice the phases reduce to integer
// harmonics on the proportional grid, so a slice is one inverse DFT;
// requires dims_j >= 2*max|m_j|+1 (exact trigonometric sampling)
SpaceTimeGrid evolve_grid(const SpectralData& data, std::vector<double> times,
                          std::vector<int> dims);

// extension operator at arbitrary points
std::vector<cplx> extend(const SpectralData& data, std::span<const SpaceTimePoint> points,
                         PhaseConvention conv = PhaseConvention::two_pi);
cplx extend_at(const SpectralData& data, const SpaceTimePoint& p,
               PhaseConvention conv = PhaseConvention::two_pi);

// samples of the extension field on a uniform grid over one spatial
// period box (dims_j >= 2*max|m_j|+1), at fixed time
std::vector<cplx> extend_period_slice(const SpectralData& data, double t,
                                      std::span<const int> dims,
                                      PhaseConvention conv = PhaseConvention::two_pi);

// Rescaling bridge: maps data supported at |k| ~ N1 on the lambda-torus to
// data on the (lambda N1)-lattice with coefficients lambda^{-d/2} phi(N1 xi).
// Indices are carried over verbatim, so the map is exactly invertible.
SpectralData parabolic_rescale_bridge(const SpectralData& data, double n1);
SpectralData parabolic_rescale_bridge_inverse(const SpectralData& h, double n1);

// point map (x,t) -> extension-side argument for the bridge identity
SpaceTimePoint bridge_point(const SpaceTimePoint& p, double n1, PhaseConvention conv);

}  // namespace latwave
