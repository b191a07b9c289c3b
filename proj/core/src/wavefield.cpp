#include "latwave/wavefield.hpp"

#include <fftw3.h>

#include <cmath>
#include <mutex>
#include <stdexcept>

namespace latwave {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::mutex& fftw_mutex() {
  static std::mutex m;
  return m;
}

struct CompensatedCplx {
  double re = 0, im = 0, cre = 0, cim = 0;

  void add(cplx v) {
    // Neumaier on each component
    auto acc = [](double& s, double& c, double x) {
      const double t = s + x;
      if (std::abs(s) >= std::abs(x))
        c += (s - t) + x;
      else
        c += (x - t) + s;
      s = t;
    };
    acc(re, cre, v.real());
    acc(im, cim, v.imag());
  }
  cplx value() const { return {re + cre, im + cim}; }
};

// u(k) phase speed |2 pi k|^2
double propagator_speed(const FreqIndex& idx, const RescaledTorus& torus) {
  return kTwoPi * kTwoPi * index_abs2(idx, torus);
}

}  // namespace

std::vector<cplx> evolve(const SpectralData& data, std::span<const SpaceTimePoint> points) {
  std::vector<cplx> out(points.size());
  const auto& torus = data.torus();
  const double amp = std::pow(torus.lambda, -0.5 * torus.dim());
  for (std::size_t p = 0; p < points.size(); ++p) {
    CompensatedCplx acc;
    for (const auto& [idx, c] : data.entries()) {
      const auto k = index_value(idx, torus);
      double kx = 0.0;
      for (int j = 0; j < torus.dim(); ++j)
        kx += k[static_cast<std::size_t>(j)] * points[p].x[static_cast<std::size_t>(j)];
      const double phase = kTwoPi * kx - propagator_speed(idx, torus) * points[p].t;
      acc.add(c * cplx{std::cos(phase), std::sin(phase)});
    }
    out[p] = amp * acc.value();
  }
  return out;
}

cplx evolve_at(const SpectralData& data, const SpaceTimePoint& p) {
  return evolve(data, std::span<const SpaceTimePoint>(&p, 1))[0];
}

std::size_t SpaceTimeGrid::slice_stride() const {
  std::size_t s = 1;
  for (int n : dims) s *= static_cast<std::size_t>(n);
  return s;
}

cplx SpaceTimeGrid::at(std::size_t time_idx, std::span<const int> coords) const {
  std::size_t off = 0;
  for (std::size_t j = 0; j < dims.size(); ++j)
    off = off * static_cast<std::size_t>(dims[j]) + static_cast<std::size_t>(coords[j]);
  return values[time_idx * slice_stride() + off];
}

std::array<double, kMaxDim> SpaceTimeGrid::point(std::span<const int> coords) const {
  std::array<double, kMaxDim> x{};
  for (std::size_t j = 0; j < dims.size(); ++j)
    x[j] = torus.axis_length(static_cast<int>(j)) * static_cast<double>(coords[j]) /
           static_cast<double>(dims[j]);
  return x;
}

namespace {

// one inverse DFT per slice: scatter amplitudes at bins (m mod R), then
// out[n] = sum_m C_m exp(+2 pi i m.n/R)  (FFTW backward sign)
void synthesize_slice(const std::vector<std::pair<FreqIndex, cplx>>& terms,
                      std::span<const int> dims, int sign, cplx* out) {
  std::size_t total = 1;
  for (int n : dims) total *= static_cast<std::size_t>(n);
  std::fill(out, out + total, cplx{0.0, 0.0});
  for (const auto& [idx, c] : terms) {
    std::size_t off = 0;
    for (std::size_t j = 0; j < dims.size(); ++j) {
      const int r = dims[j];
      int b = static_cast<int>(idx.m[j] % r);
      if (b < 0) b += r;
      off = off * static_cast<std::size_t>(r) + static_cast<std::size_t>(b);
    }
    out[off] += c;
  }
  std::lock_guard<std::mutex> lock(fftw_mutex());
  std::vector<int> n(dims.begin(), dims.end());
  fftw_plan plan = fftw_plan_dft(static_cast<int>(n.size()), n.data(),
                                 reinterpret_cast<fftw_complex*>(out),
                                 reinterpret_cast<fftw_complex*>(out), sign, FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
}

void require_bandwidth(const SpectralData& data, std::span<const int> dims) {
  for (int j = 0; j < data.torus().dim(); ++j) {
    const std::int64_t need = 2 * data.max_abs_index(j) + 1;
    if (dims[static_cast<std::size_t>(j)] < need)
      throw std::invalid_argument("grid resolution below bandwidth (aliasing): axis " +
                                  std::to_string(j) + " needs >= " + std::to_string(need));
  }
}

}  // namespace

SpaceTimeGrid evolve_grid(const SpectralData& data, std::vector<double> times,
                          std::vector<int> dims) {
  const auto& torus = data.torus();
  if (static_cast<int>(dims.size()) != torus.dim())
    throw std::invalid_argument("evolve_grid: dims size must equal dimension");
  require_bandwidth(data, dims);

  SpaceTimeGrid g{torus, std::move(times), std::move(dims), {}};
  const std::size_t stride = g.slice_stride();
  g.values.resize(stride * g.times.size());

  const double amp = std::pow(torus.lambda, -0.5 * torus.dim());
  std::vector<std::pair<FreqIndex, cplx>> terms(data.entries());
  for (std::size_t ti = 0; ti < g.times.size(); ++ti) {
    const double t = g.times[ti];
    for (std::size_t a = 0; a < terms.size(); ++a) {
      const auto& [idx, c] = data.entries()[a];
      const double phase = -propagator_speed(idx, torus) * t;
      terms[a].second = amp * c * cplx{std::cos(phase), std::sin(phase)};
    }
    synthesize_slice(terms, g.dims, FFTW_BACKWARD, g.values.data() + ti * stride);
  }
  return g;
}

std::vector<cplx> extend(const SpectralData& data, std::span<const SpaceTimePoint> points,
                         PhaseConvention conv) {
  const double spatial = conv == PhaseConvention::two_pi ? kTwoPi : 1.0;
  std::vector<cplx> out(points.size());
  const auto& torus = data.torus();
  for (std::size_t p = 0; p < points.size(); ++p) {
    CompensatedCplx acc;
    for (const auto& [idx, c] : data.entries()) {
      const auto xi = index_value(idx, torus);
      double xx = 0.0, xi2 = 0.0;
      for (int j = 0; j < torus.dim(); ++j) {
        xx += xi[static_cast<std::size_t>(j)] * points[p].x[static_cast<std::size_t>(j)];
        xi2 += xi[static_cast<std::size_t>(j)] * xi[static_cast<std::size_t>(j)];
      }
      const double phase = -spatial * (xx + xi2 * points[p].t);
      acc.add(c * cplx{std::cos(phase), std::sin(phase)});
    }
    out[p] = acc.value();
  }
  return out;
}

cplx extend_at(const SpectralData& data, const SpaceTimePoint& p, PhaseConvention conv) {
  return extend(data, std::span<const SpaceTimePoint>(&p, 1), conv)[0];
}

std::vector<cplx> extend_period_slice(const SpectralData& data, double t,
                                      std::span<const int> dims, PhaseConvention conv) {
  if (conv != PhaseConvention::two_pi)
    throw std::invalid_argument("extend_period_slice: only the 2-pi convention is periodic "
                                "on the torus box");
  const auto& torus = data.torus();
  if (static_cast<int>(dims.size()) != torus.dim())
    throw std::invalid_argument("extend_period_slice: dims size must equal dimension");
  require_bandwidth(data, dims);

  std::vector<std::pair<FreqIndex, cplx>> terms(data.entries());
  for (std::size_t a = 0; a < terms.size(); ++a) {
    const auto& [idx, c] = data.entries()[a];
    const double phase = -kTwoPi * index_abs2(idx, torus) * t;
    terms[a].second = c * cplx{std::cos(phase), std::sin(phase)};
  }
  std::size_t total = 1;
  for (int n : dims) total *= static_cast<std::size_t>(n);
  std::vector<cplx> out(total);
  // e^{-2 pi i xi.x} at x = s*period reduces to e^{-2 pi i m.n/R}: forward sign
  synthesize_slice(terms, dims, FFTW_FORWARD, out.data());
  return out;
}

SpectralData parabolic_rescale_bridge(const SpectralData& data, double n1) {
  if (!(n1 >= 1.0)) throw std::invalid_argument("bridge: n1 must be >= 1");
  const auto& torus = data.torus();
  FrequencyRegion ann = FrequencyRegion::annulus(n1);
  if (n1 > 1.0 && !data.supported_in(ann))
    throw std::invalid_argument("bridge: data must be supported at |k| ~ n1");
  RescaledTorus fine(torus.shape, torus.lambda * n1);
  const double amp = std::pow(torus.lambda, -0.5 * torus.dim());
  std::vector<std::pair<FreqIndex, cplx>> entries(data.entries());
  for (auto& [idx, c] : entries) c *= amp;
  return SpectralData::from_entries(std::move(fine), std::move(entries));
}

SpectralData parabolic_rescale_bridge_inverse(const SpectralData& h, double n1) {
  if (!(n1 >= 1.0)) throw std::invalid_argument("bridge: n1 must be >= 1");
  const auto& fine = h.torus();
  const double lambda = fine.lambda / n1;
  if (!(lambda >= 1.0 - 1e-12))
    throw std::invalid_argument("bridge inverse: resulting lambda would be < 1");
  RescaledTorus coarse(fine.shape, lambda);
  const double amp = std::pow(coarse.lambda, 0.5 * coarse.dim());
  std::vector<std::pair<FreqIndex, cplx>> entries(h.entries());
  for (auto& [idx, c] : entries) c *= amp;
  return SpectralData::from_entries(std::move(coarse), std::move(entries));
}

SpaceTimePoint bridge_point(const SpaceTimePoint& p, double n1, PhaseConvention conv) {
  SpaceTimePoint q;
  const double sx = conv == PhaseConvention::plain ? -kTwoPi * n1 : -n1;
  const double st = conv == PhaseConvention::plain ? kTwoPi * kTwoPi * n1 * n1 : kTwoPi * n1 * n1;
  q.t = st * p.t;
  for (std::size_t j = 0; j < kMaxDim; ++j) q.x[j] = sx * p.x[j];
  return q;
}

}  // namespace latwave
