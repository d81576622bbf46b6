#include "spectight/sampling.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace spectight {

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw std::invalid_argument("empty integer range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - lo + 1;
  return lo + static_cast<int>(gen_() % span);
}

double Rng::normal() {
  const double u1 = 1.0 - uniform01();  // (0, 1]
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::vector<double> Rng::unit_vector(int dim) {
  std::vector<double> v(dim);
  while (true) {
    double nrm2 = 0.0;
    for (double& x : v) {
      x = normal();
      nrm2 += x * x;
    }
    if (nrm2 > 1e-24) {
      const double inv = 1.0 / std::sqrt(nrm2);
      for (double& x : v) x *= inv;
      return v;
    }
  }
}

std::vector<std::vector<double>> tightness_directions(int dim, const SamplingConfig& cfg) {
  if (dim < 1) throw std::invalid_argument("direction dimension must be >= 1");
  std::vector<std::vector<double>> dirs;
  if (dim == 1) {
    dirs.push_back({1.0});
    return dirs;
  }
  for (int i = 0; i < dim; ++i) {
    std::vector<double> e(dim, 0.0);
    e[i] = 1.0;
    dirs.push_back(std::move(e));
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (double sign : {1.0, -1.0}) {
        std::vector<double> d(dim, 0.0);
        d[i] = inv_sqrt2;
        d[j] = sign * inv_sqrt2;
        dirs.push_back(std::move(d));
      }
  Rng rng(cfg.seed);
  for (int k = 0; k < cfg.n_random; ++k) dirs.push_back(rng.unit_vector(dim));
  return dirs;
}

}  // namespace spectight
