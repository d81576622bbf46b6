#include "spectight/fixtures.hpp"

#include <cmath>
#include <numbers>

namespace spectight {

VertexFunction c20_tight_wave() {
  VertexFunction u(20);
  for (int i = 0; i < 20; ++i) u[i] = std::cos(2.0 * std::numbers::pi * i / 20.0);
  return u;
}

VertexFunction c20_nontight_wave() {
  return {1.0,  0.6,  0.2,   -0.2, -0.6, -1.0, -0.8, -0.5, -0.2, -0.55,
          -0.2, 0.2,  0.6,   0.9,  0.5,  0.7,  0.8,  0.85, 0.9,  0.95};
}

}  // namespace spectight
