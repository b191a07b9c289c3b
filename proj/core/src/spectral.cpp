#include "latwave/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace latwave {

SpectralData SpectralData::from_entries(RescaledTorus torus,
                                        std::vector<std::pair<FreqIndex, cplx>> entries) {
  SpectralData d(std::move(torus));
  for (const auto& [idx, c] : entries) {
    if (idx.d != d.torus_.dim())
      throw std::invalid_argument("SpectralData: index dimension mismatch");
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  // merge duplicates
  for (const auto& [idx, c] : entries) {
    if (!d.entries_.empty() && d.entries_.back().first == idx)
      d.entries_.back().second += c;
    else
      d.entries_.emplace_back(idx, c);
  }
  return d;
}

void SpectralData::add(const FreqIndex& idx, cplx amplitude) {
  if (idx.d != torus_.dim()) throw std::invalid_argument("SpectralData: index dimension mismatch");
  auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                             [](const auto& e, const FreqIndex& k) { return e.first < k; });
  if (it != entries_.end() && it->first == idx)
    it->second += amplitude;
  else
    entries_.insert(it, {idx, amplitude});
}

std::optional<cplx> SpectralData::coefficient(const FreqIndex& idx) const {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), idx,
                             [](const auto& e, const FreqIndex& k) { return e.first < k; });
  if (it != entries_.end() && it->first == idx) return it->second;
  return std::nullopt;
}

SpectralData SpectralData::scaled(cplx factor) const {
  SpectralData out(torus_);
  out.entries_ = entries_;
  for (auto& [idx, c] : out.entries_) c *= factor;
  return out;
}

SpectralData SpectralData::plus(const SpectralData& other) const {
  if (other.torus_.dim() != torus_.dim() || other.torus_.lambda != torus_.lambda)
    throw std::invalid_argument("SpectralData::plus: torus mismatch");
  SpectralData out = *this;
  for (const auto& [idx, c] : other.entries_) out.add(idx, c);
  return out;
}

double SpectralData::l2_sum_sq() const {
  double s = 0.0, comp = 0.0;
  for (const auto& [idx, c] : entries_) {
    const double v = std::norm(c);
    const double y = v - comp;
    const double t = s + y;
    comp = (t - s) - y;
    s = t;
  }
  return s;
}

double SpectralData::torus_l2_norm() const {
  return std::sqrt(torus_.shape.alpha_product() * l2_sum_sq());
}

std::int64_t SpectralData::max_abs_index(int axis) const {
  std::int64_t mx = 0;
  for (const auto& [idx, c] : entries_)
    mx = std::max<std::int64_t>(mx, std::llabs(idx.m[static_cast<std::size_t>(axis)]));
  return mx;
}

bool SpectralData::supported_in(const FrequencyRegion& region) const {
  for (const auto& [idx, c] : entries_) {
    if (!region.contains_abs2(index_abs2(idx, torus_))) return false;
  }
  return true;
}

double TimeCutoff::eval(double t) const {
  if (t < 0.0 || t > 1.0) return 0.0;
  if (kind == Kind::sharp) return 1.0;
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return std::exp(1.0 - 1.0 / (4.0 * t * (1.0 - t)));
}

}  // namespace latwave
