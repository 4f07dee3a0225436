#include <doctest.h>

#include <cmath>
#include <vector>

#include "shearlf/rng.hpp"
#include "shearlf/shearlet.hpp"

using namespace shearlf;

namespace {

Plane random_plane(int rows, int cols, uint64_t seed) {
  Rng rng(seed);
  Plane p(rows, cols);
  for (size_t i = 0; i < p.size(); ++i) p.data()[i] = rng.uniform(-1.0, 1.0);
  return p;
}

double dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0.0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

double sq_norm(const Plane& p) {
  double s = 0.0;
  for (size_t i = 0; i < p.size(); ++i) s += p.data()[i] * p.data()[i];
  return s;
}

double sq_norm(const CoefficientStack<double>& c) {
  double s = 0.0;
  for (double v : c.data) s += v * v;
  return s;
}

}  // namespace

TEST_CASE("scale_count") {
  CHECK(scale_count(16) == 4);
  CHECK(scale_count(17) == 5);
  CHECK(scale_count(32) == 5);
  CHECK(scale_count(9) == 4);
  CHECK(scale_count(2) == 1);
  CHECK_THROWS_AS(scale_count(1), std::invalid_argument);
}

TEST_CASE("shearlet_count") {
  CHECK(shearlet_count(4) == 35);
  CHECK(shearlet_count(5) == 68);
  CHECK(shearlet_count(1) == 4);
  CHECK_THROWS_AS(shearlet_count(0), std::invalid_argument);

  // Equals 1 + sum over scales of (2^(j+1)+1).
  for (int xi = 1; xi <= 6; ++xi) {
    int acc = 1;
    for (int j = 0; j < xi; ++j) acc += (1 << (j + 1)) + 1;
    CHECK(shearlet_count(xi) == acc);
  }
}

TEST_CASE("build_system structure") {
  ShearletSystem sys(128, 384, 4, 127);
  CHECK(sys.count() == 35);
  CHECK(sys.info(0).kind == FilterInfo::kLowpass);

  // Per-scale directional counts 3, 5, 9, 17 with shears -2^j..2^j.
  std::vector<int> per_scale(4, 0);
  for (int t = 1; t < sys.count(); ++t) {
    REQUIRE(sys.info(t).kind == FilterInfo::kDirectional);
    per_scale[sys.info(t).scale]++;
  }
  CHECK(per_scale == std::vector<int>{3, 5, 9, 17});
  CHECK(sys.info(1).shear == -1);
  CHECK(sys.info(3).shear == 1);
  CHECK(sys.info(sys.count() - 1).shear == 8);
  // Nominal slopes cover [0, 1] within each scale.
  CHECK(sys.info(1).slope == 0.0);
  CHECK(sys.info(2).slope == 0.5);
  CHECK(sys.info(3).slope == 1.0);

  CHECK_THROWS_AS(ShearletSystem(32, 384, 4, 127), std::invalid_argument);
  CHECK_THROWS_AS(ShearletSystem(64, 64, 5, 127), std::invalid_argument);  // needs 2^(xi+2) = 128
  CHECK_THROWS_AS(ShearletSystem(128, 384, 4, 126), std::invalid_argument);
}

TEST_CASE("Parseval partition of unity") {
  ShearletSystem sys(128, 384, 4, 127);
  double worst = 0.0;
  for (int v = 0; v < 128; ++v)
    for (int u = 0; u < 384; ++u) {
      double acc = 0.0;
      for (int t = 0; t < sys.count(); ++t) acc += sys.filter(t)(v, u) * sys.filter(t)(v, u);
      worst = std::max(worst, std::abs(acc - 1.0));
    }
  CHECK(worst < 1e-10);
}

TEST_CASE("directional filters vanish at DC") {
  ShearletSystem sys(128, 128, 3, 63);
  for (int t = 1; t < sys.count(); ++t) CHECK(sys.filter(t)(0, 0) == 0.0);
  CHECK(sys.filter(0)(0, 0) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("determinism") {
  ShearletSystem a(128, 128, 2, 31), b(128, 128, 2, 31);
  for (int t = 0; t < a.count(); ++t)
    for (size_t i = 0; i < a.filter(t).size(); ++i)
      CHECK(a.filter(t).data()[i] == b.filter(t).data()[i]);
}

TEST_CASE("constant image energy goes to the lowpass") {
  ShearletSystem sys(128, 256, 4, 127);
  Plane img(128, 256, 0.73);
  auto c = sys.analysis(img);
  for (int t = 1; t < c.channels; ++t) {
    double mx = 0.0;
    for (size_t i = 0; i < c.plane_size(); ++i)
      mx = std::max(mx, std::abs(c.channel(t)[i]));
    CHECK(mx < 1e-10);
  }
  double lowpass_max = 0.0;
  for (size_t i = 0; i < c.plane_size(); ++i)
    lowpass_max = std::max(lowpass_max, std::abs(c.channel(0)[i]));
  CHECK(lowpass_max > 0.5);
}

TEST_CASE("analysis is linear") {
  ShearletSystem sys(64, 64, 1, 15);
  Plane x = random_plane(64, 64, 1), y = random_plane(64, 64, 2);
  const double a = 1.7, b = -0.4;
  Plane mix(64, 64);
  for (size_t i = 0; i < mix.size(); ++i) mix.data()[i] = a * x.data()[i] + b * y.data()[i];
  auto cm = sys.analysis(mix);
  auto cx = sys.analysis(x);
  auto cy = sys.analysis(y);
  double worst = 0.0;
  for (size_t i = 0; i < cm.data.size(); ++i)
    worst = std::max(worst, std::abs(cm.data[i] - (a * cx.data[i] + b * cy.data[i])));
  CHECK(worst < 1e-12);
}

TEST_CASE("tight frame: reconstruction, energy, adjoint") {
  ShearletSystem sys(128, 384, 4, 127);
  for (int trial = 0; trial < 20; ++trial) {
    Plane x = random_plane(128, 384, 100 + trial);
    auto c = sys.analysis(x);
    Plane back = sys.synthesis(c);

    double recon = max_abs_diff(back, x);
    CHECK(recon < 1e-8);

    double ex = sq_norm(x), ec = sq_norm(c);
    CHECK(std::abs(ec - ex) / ex < 1e-8);
  }

  // Adjoint identity <SH x, c> = <x, SH* c> on random pairs.
  for (int trial = 0; trial < 5; ++trial) {
    Plane x = random_plane(128, 384, 300 + trial);
    CoefficientStack<double> c(128, 384, sys.count());
    Rng rng(400 + trial);
    for (auto& v : c.data) v = rng.uniform(-1.0, 1.0);
    auto shx = sys.analysis(x);
    Plane shc = sys.synthesis(c);
    double lhs = dot(shx.data, c.data);
    double rhs = 0.0;
    for (size_t i = 0; i < x.size(); ++i) rhs += x.data()[i] * shc.data()[i];
    CHECK(std::abs(lhs - rhs) / std::max(std::abs(lhs), 1e-30) < 1e-10);
  }
}

TEST_CASE("zero coefficients synthesize to zero") {
  ShearletSystem sys(64, 64, 1, 15);
  CoefficientStack<double> c(64, 64, sys.count());
  Plane out = sys.synthesis(c);
  for (size_t i = 0; i < out.size(); ++i) CHECK(out.data()[i] == 0.0);
}

TEST_CASE("float transforms mirror the double path") {
  ShearletSystem sys(128, 128, 4, 127);
  Plane x = random_plane(128, 128, 77);
  PlaneF xf = x.cast<float>();
  auto cf = sys.analysis(xf);
  PlaneF backf = sys.synthesis(cf);
  double worst = 0.0;
  for (size_t i = 0; i < x.size(); ++i)
    worst = std::max(worst, std::abs(static_cast<double>(backf.data()[i]) - x.data()[i]));
  CHECK(worst < 1e-4);
}

TEST_CASE("directional selectivity on sheared line patterns") {
  // An EPI of parallel lines with slope s concentrates its fine-scale energy
  // in the wedges whose nominal slope is nearest s.
  ShearletSystem sys(128, 384, 4, 127);
  for (double slope : {0.0, 0.25, 0.5, 0.75, 1.0}) {
    // Texture translated by `slope` per row. Harmonics are multiples of 12 so
    // the pattern is exactly periodic in both axes for quarter-integer slopes;
    // all spectral energy then sits exactly on the line ny = -slope * nx.
    Plane img(128, 384);
    for (int r = 0; r < 128; ++r)
      for (int x = 0; x < 384; ++x) {
        double pos = x - slope * r;
        double v = 0.0;
        for (int h = 60; h <= 156; h += 24)
          v += std::cos(2.0 * 3.14159265358979323846 * h * pos / 384.0 + 0.7 * h);
        img(r, x) = v;
      }

    auto c = sys.analysis(img);
    double total_dir = 0.0, near = 0.0;
    for (int t = 1; t < sys.count(); ++t) {
      double e = 0.0;
      for (size_t i = 0; i < c.plane_size(); ++i) e += c.channel(t)[i] * c.channel(t)[i];
      total_dir += e;
      if (std::abs(sys.info(t).slope - slope) <= 1.0 / 16.0 + 1e-12) near += e;
    }
    INFO("slope ", slope);
    CHECK(near / total_dir >= 0.5);
  }
}
