#include "shearlf/light_field.hpp"

#include <string>

namespace shearlf {

void LightField::validate() const {
  require(!views.empty(), "light field has no views");
  for (const auto& v : views)
    require(v.same_shape(views[0]), "light field views differ in size");
}

int dense_view_count(int n, int tau) {
  require(n >= 1, "dense_view_count: n must be >= 1");
  require(tau >= 1, "dense_view_count: tau must be >= 1");
  return (n - 1) * tau + 1;
}

Epi extract_epi(const LightField& lf, int row) {
  lf.validate();
  if (row < 0 || row >= lf.height())
    throw std::out_of_range("extract_epi: row " + std::to_string(row) +
                            " outside [0, " + std::to_string(lf.height()) + ")");
  Epi epi(lf.n(), lf.width());
  for (int c = 0; c < 3; ++c)
    for (int i = 0; i < lf.n(); ++i)
      for (int x = 0; x < lf.width(); ++x)
        epi.ch[c](i, x) = lf.views[i].ch[c](row, x);
  return epi;
}

LightField assemble_lf(const std::vector<Epi>& epis) {
  require(!epis.empty(), "assemble_lf: empty EPI list");
  const int n = epis[0].rows();
  const int m = epis[0].cols();
  for (const auto& e : epis)
    require(e.rows() == n && e.cols() == m, "assemble_lf: EPI shape mismatch");

  LightField lf;
  lf.views.assign(n, ColorImage(static_cast<int>(epis.size()), m));
  for (int j = 0; j < static_cast<int>(epis.size()); ++j)
    for (int c = 0; c < 3; ++c)
      for (int i = 0; i < n; ++i)
        for (int x = 0; x < m; ++x)
          lf.views[i].ch[c](j, x) = epis[j].ch[c](i, x);
  return lf;
}

std::vector<std::array<int, 3>> split_sub_sslf(int n) {
  require(n >= 3, "split_sub_sslf: need at least 3 views");
  require(n % 2 == 1, "split_sub_sslf: view count must be odd");
  std::vector<std::array<int, 3>> triples;
  for (int i = 0; i < n / 2; ++i)
    triples.push_back({2 * i, 2 * i + 1, 2 * i + 2});
  return triples;
}

LightField merge_sub_dslf(const std::vector<LightField>& sub_results, int tau) {
  require(!sub_results.empty(), "merge_sub_dslf: empty input");
  require(tau >= 1, "merge_sub_dslf: tau must be >= 1");
  const int per_sub = 2 * tau + 1;
  for (const auto& s : sub_results) {
    s.validate();
    require(s.n() == per_sub, "merge_sub_dslf: sub-result must have 2*tau+1 views");
  }
  const double kBoundaryTol = 1e-6;
  for (size_t k = 0; k + 1 < sub_results.size(); ++k) {
    double d = max_abs_diff(sub_results[k].views.back(), sub_results[k + 1].views.front());
    if (d > kBoundaryTol)
      throw NumericError("merge_sub_dslf: boundary views disagree by " + std::to_string(d));
  }

  LightField out;
  out.views.reserve(sub_results.size() * (per_sub - 1) + 1);
  for (size_t k = 0; k < sub_results.size(); ++k)
    for (int i = (k == 0 ? 0 : 1); i < per_sub; ++i)
      out.views.push_back(sub_results[k].views[i]);
  return out;
}

}  // namespace shearlf
