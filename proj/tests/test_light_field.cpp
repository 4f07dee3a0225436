#include <doctest.h>

#include <cmath>
#include <limits>

#include "shearlf/light_field.hpp"
#include "shearlf/metrics.hpp"
#include "shearlf/rng.hpp"

using namespace shearlf;

namespace {

LightField random_lf(int n, int rows, int cols, uint64_t seed) {
  Rng rng(seed);
  LightField lf;
  for (int i = 0; i < n; ++i) {
    ColorImage img(rows, cols);
    for (int c = 0; c < 3; ++c)
      for (int r = 0; r < rows; ++r)
        for (int x = 0; x < cols; ++x) img.ch[c](r, x) = rng.uniform();
    lf.views.push_back(img);
  }
  return lf;
}

}  // namespace

TEST_CASE("dense_view_count") {
  CHECK(dense_view_count(13, 16) == 193);
  CHECK(dense_view_count(25, 16) == 385);
  CHECK(dense_view_count(7, 16) == 97);
  CHECK(dense_view_count(1, 16) == 1);
  CHECK(dense_view_count(3, 16) == 33);
  CHECK_THROWS_AS(dense_view_count(0, 16), std::invalid_argument);
  CHECK_THROWS_AS(dense_view_count(3, 0), std::invalid_argument);
}

TEST_CASE("extract/assemble round-trip is exact") {
  LightField lf = random_lf(5, 7, 11, 42);
  std::vector<Epi> epis;
  for (int r = 0; r < lf.height(); ++r) epis.push_back(extract_epi(lf, r));
  CHECK(epis[0].rows() == 5);
  CHECK(epis[0].cols() == 11);
  LightField back = assemble_lf(epis);
  REQUIRE(back.n() == lf.n());
  CHECK(max_abs_diff(back.views[3], lf.views[3]) == 0.0);
  for (int i = 0; i < lf.n(); ++i) CHECK(max_abs_diff(back.views[i], lf.views[i]) == 0.0);

  CHECK_THROWS_AS(extract_epi(lf, 7), std::out_of_range);
  CHECK_THROWS_AS(extract_epi(lf, -1), std::out_of_range);
  CHECK_THROWS_AS(assemble_lf({}), std::invalid_argument);
}

TEST_CASE("single EPI assembles to height-1 light field") {
  Epi e(4, 9, 0.25);
  LightField lf = assemble_lf({e});
  CHECK(lf.n() == 4);
  CHECK(lf.height() == 1);
  CHECK(lf.width() == 9);
}

TEST_CASE("identical views give constant-row EPIs") {
  LightField lf = random_lf(1, 3, 8, 7);
  lf.views.push_back(lf.views[0]);
  lf.views.push_back(lf.views[0]);
  Epi e = extract_epi(lf, 1);
  for (int c = 0; c < 3; ++c)
    for (int i = 1; i < 3; ++i)
      for (int x = 0; x < 8; ++x) CHECK(e.ch[c](i, x) == e.ch[c](0, x));
}

TEST_CASE("split_sub_sslf") {
  auto t13 = split_sub_sslf(13);
  REQUIRE(t13.size() == 6);
  CHECK(t13[0] == std::array<int, 3>{0, 1, 2});
  CHECK(t13[1] == std::array<int, 3>{2, 3, 4});
  CHECK(t13[5] == std::array<int, 3>{10, 11, 12});

  CHECK(split_sub_sslf(3).size() == 1);
  CHECK(split_sub_sslf(7).size() == 3);
  CHECK_THROWS_AS(split_sub_sslf(4), std::invalid_argument);
  CHECK_THROWS_AS(split_sub_sslf(1), std::invalid_argument);

  // Coverage: shared endpoints appear twice, everything else once.
  std::vector<int> hits(13, 0);
  for (auto& t : t13)
    for (int v : t) hits[v]++;
  for (int v = 0; v < 13; ++v) {
    bool shared = (v % 2 == 0) && v != 0 && v != 12;
    CHECK(hits[v] == (shared ? 2 : 1));
  }
}

TEST_CASE("merge_sub_dslf") {
  const int tau = 16;
  LightField dense = random_lf(193, 2, 6, 9);
  auto triples = split_sub_sslf(13);
  std::vector<LightField> subs;
  for (auto& t : triples) {
    LightField s;
    for (int i = 2 * tau * (t[0] / 2); i < 2 * tau * (t[0] / 2) + 2 * tau + 1; ++i)
      s.views.push_back(dense.views[i]);
    subs.push_back(s);
  }
  LightField merged = merge_sub_dslf(subs, tau);
  REQUIRE(merged.n() == 193);
  for (int i = 0; i < 193; ++i) CHECK(max_abs_diff(merged.views[i], dense.views[i]) == 0.0);

  // 3 sub-results of 33 views -> 97 views.
  subs.resize(3);
  CHECK(merge_sub_dslf(subs, tau).n() == 97);
  // Single sub-result passes through.
  CHECK(merge_sub_dslf({subs[0]}, tau).n() == 33);

  // Mismatched boundary views are rejected.
  std::vector<LightField> bad = {subs[0], subs[1]};
  bad[1].views[0].ch[0](0, 0) += 0.5;
  CHECK_THROWS_AS(merge_sub_dslf(bad, tau), NumericError);
}

TEST_CASE("psnr") {
  ColorImage a(4, 5, 0.5), b(4, 5, 0.5);
  CHECK(psnr(a, b) == std::numeric_limits<double>::infinity());

  // Uniform difference 0.1 -> MSE 0.01 -> 20 dB.
  ColorImage c(4, 5, 0.4);
  CHECK(psnr(a, c) == doctest::Approx(20.0).epsilon(1e-12));

  // Uniform difference 0.5 -> 10*log10(4).
  ColorImage d(4, 5, 0.0);
  CHECK(psnr(a, d) == doctest::Approx(6.0205999132796239).epsilon(1e-12));

  ColorImage e(4, 6, 0.0);
  CHECK_THROWS_AS(psnr(a, e), std::invalid_argument);
}

TEST_CASE("psnr decreases with MSE and is symmetric") {
  Rng rng(3);
  Plane x(6, 6);
  for (size_t i = 0; i < x.size(); ++i) x.data()[i] = rng.uniform(0.0, 0.5);
  Plane y1 = x, y2 = x;
  for (size_t i = 0; i < x.size(); ++i) {
    y1.data()[i] += 0.1;
    y2.data()[i] += 0.3;
  }
  CHECK(psnr(x, y1) > psnr(x, y2));
  CHECK(psnr(x, y1) == doctest::Approx(psnr(y1, x)));
  CHECK(psnr(x, y2) >= 0.0);
}

TEST_CASE("evaluate") {
  LightField gt = random_lf(5, 3, 4, 11);
  for (auto& v : gt.views)
    for (int c = 0; c < 3; ++c)
      for (size_t i = 0; i < v.ch[c].size(); ++i) v.ch[c].data()[i] *= 0.9;

  SUBCASE("identical fields") {
    auto r = evaluate(gt, gt, {0, 4});
    CHECK(std::isinf(r.min_psnr));
    CHECK(std::isinf(r.avg_psnr));
  }

  SUBCASE("constant offset on synthesized views") {
    LightField dslf = gt;
    for (int i = 0; i < 5; ++i) {
      if (i == 0 || i == 4) continue;
      for (int c = 0; c < 3; ++c)
        for (size_t p = 0; p < dslf.views[i].ch[c].size(); ++p)
          dslf.views[i].ch[c].data()[p] += 0.1;
    }
    auto r = evaluate(dslf, gt, {0, 4});
    CHECK(r.min_psnr == doctest::Approx(20.0).epsilon(1e-9));
    CHECK(r.avg_psnr == doctest::Approx(20.0).epsilon(1e-9));
  }

  SUBCASE("one degraded synthesized view sets the minimum") {
    LightField dslf = gt;
    for (int c = 0; c < 3; ++c)
      for (size_t p = 0; p < dslf.views[2].ch[c].size(); ++p)
        dslf.views[2].ch[c].data()[p] += 0.1;
    auto r = evaluate(dslf, gt, {0, 4});
    CHECK(r.min_psnr == doctest::Approx(20.0).epsilon(1e-9));
    CHECK(std::isinf(r.avg_psnr));  // exact views contribute +inf to the mean
  }

  SUBCASE("all views excluded") {
    CHECK_THROWS_AS(evaluate(gt, gt, {0, 1, 2, 3, 4}), std::invalid_argument);
  }
}
