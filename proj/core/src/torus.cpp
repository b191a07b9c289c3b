#include "latwave/torus.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace latwave {

TorusShape::TorusShape(int dim, std::vector<double> a) : d(dim), alphas(std::move(a)) {
  if (d < 2) throw std::invalid_argument("TorusShape: dimension must be >= 2");
  if (d > kMaxDim) throw std::invalid_argument("TorusShape: dimension capped at 6");
  if (static_cast<int>(alphas.size()) != d - 1)
    throw std::invalid_argument("TorusShape: need d-1 anisotropy factors");
  for (double a_i : alphas) {
    if (!(a_i >= 0.5 && a_i <= 1.0))
      throw std::invalid_argument("TorusShape: anisotropy factors must lie in [1/2, 1]");
  }
}

double TorusShape::axis_alpha(int j) const {
  if (j < 0 || j >= d) throw std::out_of_range("TorusShape::axis_alpha");
  return j == 0 ? 1.0 : alphas[static_cast<std::size_t>(j - 1)];
}

double TorusShape::alpha_product() const {
  double p = 1.0;
  for (double a : alphas) p *= a;
  return p;
}

RescaledTorus::RescaledTorus(TorusShape s, double lam) : shape(std::move(s)), lambda(lam) {
  if (!(lambda >= 1.0)) throw std::invalid_argument("RescaledTorus: lambda must be >= 1");
}

double RescaledTorus::measure() const {
  return std::pow(lambda, shape.d) * shape.alpha_product();
}

FreqIndex FreqIndex::of(std::initializer_list<std::int32_t> vals) {
  if (vals.size() > kMaxDim) throw std::invalid_argument("FreqIndex: too many entries");
  FreqIndex k;
  k.d = static_cast<std::int8_t>(vals.size());
  int i = 0;
  for (auto v : vals) k.m[static_cast<std::size_t>(i++)] = v;
  return k;
}

FreqIndex FreqIndex::zero(int dim) {
  FreqIndex k;
  k.d = static_cast<std::int8_t>(dim);
  return k;
}

bool FreqIndex::operator==(const FreqIndex& o) const {
  if (d != o.d) return false;
  for (int i = 0; i < d; ++i)
    if (m[static_cast<std::size_t>(i)] != o.m[static_cast<std::size_t>(i)]) return false;
  return true;
}

bool FreqIndex::operator<(const FreqIndex& o) const {
  if (d != o.d) return d < o.d;
  for (int i = 0; i < d; ++i) {
    auto a = m[static_cast<std::size_t>(i)], b = o.m[static_cast<std::size_t>(i)];
    if (a != b) return a < b;
  }
  return false;
}

FreqIndex FreqIndex::added(const FreqIndex& o) const {
  if (d != o.d) throw std::invalid_argument("FreqIndex: dimension mismatch");
  FreqIndex r = *this;
  for (int i = 0; i < d; ++i) r.m[static_cast<std::size_t>(i)] += o.m[static_cast<std::size_t>(i)];
  return r;
}

FreqIndex FreqIndex::negated() const {
  FreqIndex r = *this;
  for (int i = 0; i < d; ++i) r.m[static_cast<std::size_t>(i)] = -r.m[static_cast<std::size_t>(i)];
  return r;
}

std::string FreqIndex::str() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < d; ++i) {
    if (i) os << ',';
    os << m[static_cast<std::size_t>(i)];
  }
  os << ')';
  return os.str();
}

std::size_t FreqIndexHash::operator()(const FreqIndex& k) const {
  // FNV-1a over the active entries
  std::uint64_t h = 1469598103934665603ull;
  auto mix = [&h](std::uint64_t v) {
    h ^= v;
    h *= 1099511628211ull;
  };
  mix(static_cast<std::uint64_t>(k.d));
  for (int i = 0; i < k.d; ++i)
    mix(static_cast<std::uint64_t>(static_cast<std::uint32_t>(k.m[static_cast<std::size_t>(i)])));
  return static_cast<std::size_t>(h);
}

std::array<double, kMaxDim> index_value(const FreqIndex& idx, const RescaledTorus& torus) {
  if (idx.d != torus.dim()) throw std::invalid_argument("index_value: dimension mismatch");
  std::array<double, kMaxDim> v{};
  for (int j = 0; j < idx.d; ++j)
    v[static_cast<std::size_t>(j)] =
        idx.m[static_cast<std::size_t>(j)] / (torus.shape.axis_alpha(j) * torus.lambda);
  return v;
}

double index_abs2(const FreqIndex& idx, const RescaledTorus& torus) {
  auto v = index_value(idx, torus);
  double s = 0.0;
  for (int j = 0; j < idx.d; ++j) s += v[static_cast<std::size_t>(j)] * v[static_cast<std::size_t>(j)];
  return s;
}

FrequencyAtom FrequencyAtom::resolve(const FreqIndex& idx, const RescaledTorus& torus) {
  FrequencyAtom a;
  a.index = idx;
  a.value = index_value(idx, torus);
  a.lift_height = 0.0;
  for (int j = 0; j < idx.d; ++j)
    a.lift_height += a.value[static_cast<std::size_t>(j)] * a.value[static_cast<std::size_t>(j)];
  return a;
}

FrequencyRegion FrequencyRegion::ball(double r) {
  if (!(r > 0)) throw std::invalid_argument("FrequencyRegion: radius must be positive");
  FrequencyRegion f;
  f.kind = Kind::ball;
  f.radius = r;
  return f;
}

FrequencyRegion FrequencyRegion::annulus(double n, double lo, double hi) {
  if (!(n > 0) || !(lo >= 0) || !(hi > lo))
    throw std::invalid_argument("FrequencyRegion: bad annulus parameters");
  FrequencyRegion f;
  f.kind = Kind::annulus;
  f.radius = n;
  f.c1 = lo;
  f.c2 = hi;
  return f;
}

double FrequencyRegion::outer_radius() const {
  return kind == Kind::ball ? radius : c2 * radius;
}

bool FrequencyRegion::contains_abs2(double k2) const {
  if (kind == Kind::ball) return k2 <= radius * radius;
  const double lo = c1 * radius, hi = c2 * radius;
  return k2 > lo * lo && k2 <= hi * hi;
}

std::vector<FrequencyAtom> lattice_points(const RescaledTorus& torus,
                                          const FrequencyRegion& region) {
  const int d = torus.dim();
  const double r = region.outer_radius();
  std::array<std::int64_t, kMaxDim> bound{};
  for (int j = 0; j < d; ++j) {
    // |m_j| <= r * alpha_j * lambda
    bound[static_cast<std::size_t>(j)] =
        static_cast<std::int64_t>(std::floor(r * torus.shape.axis_alpha(j) * torus.lambda + 1e-9));
  }

  std::vector<FrequencyAtom> out;
  FreqIndex idx = FreqIndex::zero(d);
  // odometer over the index box, axis 0 slowest, already in lexicographic order
  std::array<std::int64_t, kMaxDim> cur{};
  for (int j = 0; j < d; ++j) cur[static_cast<std::size_t>(j)] = -bound[static_cast<std::size_t>(j)];
  while (true) {
    for (int j = 0; j < d; ++j)
      idx.m[static_cast<std::size_t>(j)] = static_cast<std::int32_t>(cur[static_cast<std::size_t>(j)]);
    const double k2 = index_abs2(idx, torus);
    if (region.contains_abs2(k2)) out.push_back(FrequencyAtom::resolve(idx, torus));

    int j = d - 1;
    while (j >= 0) {
      auto& c = cur[static_cast<std::size_t>(j)];
      if (++c <= bound[static_cast<std::size_t>(j)]) break;
      c = -bound[static_cast<std::size_t>(j)];
      --j;
    }
    if (j < 0) break;
  }
  return out;
}

std::vector<double> lattice_spacings(const RescaledTorus& torus) {
  std::vector<double> s(static_cast<std::size_t>(torus.dim()));
  for (int j = 0; j < torus.dim(); ++j) s[static_cast<std::size_t>(j)] = torus.axis_spacing(j);
  return s;
}

}  // namespace latwave
