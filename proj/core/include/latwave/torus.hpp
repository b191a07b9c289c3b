#pragma once

// Rescaled irrational tori and their dual frequency lattices.
//
// The spatial domain is the box [0,L] x [0,a_1 L] x ... x [0,a_{d-1} L]
// with L = lambda and anisotropy factors a_i in [1/2, 1].  Its dual
// lattice has per-axis spacings 1/lambda, 1/(a_1 lambda), ... so that
// exp(2 pi i k.x) is periodic on the torus.  Frequencies are carried as
// integer index vectors; real coordinates are always recomputed from the
// index so that irrational anisotropy never accumulates representation
// drift across module boundaries.

#include <array>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace latwave {

inline constexpr int kMaxDim = 6;

struct TorusShape {
  int d = 2;
  std::vector<double> alphas;  // d-1 entries, each in [1/2, 1]

  TorusShape(int dim, std::vector<double> a);

  // anisotropy factor of spatial axis j (axis 0 has factor 1)
  double axis_alpha(int j) const;
  double alpha_product() const;
};

struct RescaledTorus {
  TorusShape shape;
  double lambda = 1.0;

  RescaledTorus(TorusShape s, double lam);

  int dim() const { return shape.d; }
  double axis_length(int j) const { return lambda * shape.axis_alpha(j); }
  // lebesgue measure lambda^d * prod(alpha_i)
  double measure() const;
  // dual-lattice spacing along axis j: 1 / (alpha_j * lambda)
  double axis_spacing(int j) const { return 1.0 / (lambda * shape.axis_alpha(j)); }
};

// Integer index of a lattice frequency.  Lexicographic order on the first
// d entries gives the canonical deterministic ordering used everywhere.
struct FreqIndex {
  std::array<std::int32_t, kMaxDim> m{};
  std::int8_t d = 0;

  static FreqIndex of(std::initializer_list<std::int32_t> vals);
  static FreqIndex zero(int dim);

  bool operator==(const FreqIndex& o) const;
  bool operator<(const FreqIndex& o) const;

  FreqIndex added(const FreqIndex& o) const;
  FreqIndex negated() const;
  std::string str() const;
};

struct FreqIndexHash {
  std::size_t operator()(const FreqIndex& k) const;
};

// A lattice frequency resolved against a concrete torus: integer index
// plus the derived real coordinates and the paraboloid lift (k, |k|^2).
struct FrequencyAtom {
  FreqIndex index;
  std::array<double, kMaxDim> value{};
  double lift_height = 0.0;  // |k|^2

  static FrequencyAtom resolve(const FreqIndex& idx, const RescaledTorus& torus);
};

// real coordinates of an index on the given torus
std::array<double, kMaxDim> index_value(const FreqIndex& idx, const RescaledTorus& torus);
double index_abs2(const FreqIndex& idx, const RescaledTorus& torus);

// Frequency-space selection region: ball |k| <= r, or annulus
// c1*N < |k| <= c2*N (lower end open, upper end closed).
struct FrequencyRegion {
  enum class Kind { ball, annulus };
  Kind kind = Kind::ball;
  double radius = 1.0;  // ball radius, or annulus reference scale N
  double c1 = 0.5;
  double c2 = 2.0;

  static FrequencyRegion ball(double r);
  static FrequencyRegion annulus(double n, double lo = 0.5, double hi = 2.0);

  double outer_radius() const;
  bool contains_abs2(double k2) const;
};

// All atoms of the dual lattice inside the region, sorted by index.
std::vector<FrequencyAtom> lattice_points(const RescaledTorus& torus,
                                          const FrequencyRegion& region);

// per-axis dual spacings (1/lambda, 1/(a_1 lambda), ...)
std::vector<double> lattice_spacings(const RescaledTorus& torus);

}  // namespace latwave
