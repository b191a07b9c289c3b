#pragma once

// Atomic frequency data: a map from lattice indices to complex amplitudes,
// kept sorted so every downstream summation has a fixed deterministic order.

#include <complex>
#include <optional>
#include <span>
#include <vector>

#include "latwave/torus.hpp"

namespace latwave {

using cplx = std::complex<double>;

class SpectralData {
 public:
  explicit SpectralData(RescaledTorus torus) : torus_(std::move(torus)) {}

  static SpectralData from_entries(RescaledTorus torus,
                                   std::vector<std::pair<FreqIndex, cplx>> entries);

  const RescaledTorus& torus() const { return torus_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  const std::vector<std::pair<FreqIndex, cplx>>& entries() const { return entries_; }

  // accumulate into an index slot (inserts if absent)
  void add(const FreqIndex& idx, cplx amplitude);
  std::optional<cplx> coefficient(const FreqIndex& idx) const;

  SpectralData scaled(cplx factor) const;
  SpectralData plus(const SpectralData& other) const;

  // sum of |coefficient|^2
  double l2_sum_sq() const;
  // L^2 norm on the torus: sqrt(prod(alpha) * sum |coef|^2)
  double torus_l2_norm() const;

  // largest |m_j| over entries, per axis (0 if empty)
  std::int64_t max_abs_index(int axis) const;

  // true when every atom satisfies the frequency-region predicate
  bool supported_in(const FrequencyRegion& region) const;

 private:
  RescaledTorus torus_;
  std::vector<std::pair<FreqIndex, cplx>> entries_;  // sorted by index
};

// Time cutoff supported in [0,1]: a sharp indicator (closed-form time
// integrals) or a smooth interior bump exp(1 - 1/(4t(1-t))).
struct TimeCutoff {
  enum class Kind { sharp, bump };
  Kind kind = Kind::sharp;

  static TimeCutoff sharp() { return TimeCutoff{Kind::sharp}; }
  static TimeCutoff bump() { return TimeCutoff{Kind::bump}; }

  double eval(double t) const;
};

}  // namespace latwave
