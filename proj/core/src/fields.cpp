#include "gaugelab/fields.hpp"

#include <cmath>

#include "gaugelab/errors.hpp"

namespace gaugelab {

ScalarField::ScalarField(const Grid& grid) : grid_(grid), values_(grid.size(), 0.0) {}

ScalarField::ScalarField(const Grid& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
  if (values_.size() != grid_.size()) throw InvalidArgument("scalar field: wrong number of samples");
}

double ScalarField::mean() const {
  double s = 0.0;
  for (double v : values_) s += v;
  return s / static_cast<double>(values_.size());
}

bool ScalarField::all_finite() const {
  for (double v : values_)
    if (!std::isfinite(v)) return false;
  return true;
}

ScalarField& ScalarField::operator+=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

ScalarField& ScalarField::operator-=(const ScalarField& o) {
  require_same_grid(grid_, o.grid_);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

ScalarField& ScalarField::operator*=(double s) {
  for (double& v : values_) v *= s;
  return *this;
}

VectorField::VectorField(const Grid& grid)
    : grid_(grid),
      comp_{std::vector<double>(grid.size(), 0.0), std::vector<double>(grid.size(), 0.0),
            std::vector<double>(grid.size(), 0.0)} {}

VectorField::VectorField(const Grid& grid, std::array<std::vector<double>, 3> components)
    : grid_(grid), comp_(std::move(components)) {
  for (const auto& c : comp_)
    if (c.size() != grid_.size()) throw InvalidArgument("vector field: wrong number of samples");
}

VectorField::VectorField(ScalarField x, ScalarField y, ScalarField z) : grid_(x.grid()) {
  require_same_grid(x.grid(), y.grid());
  require_same_grid(x.grid(), z.grid());
  comp_[0] = std::move(x.values());
  comp_[1] = std::move(y.values());
  comp_[2] = std::move(z.values());
}

Vec3 VectorField::mean() const {
  Vec3 m;
  for (int c = 0; c < 3; ++c) {
    double s = 0.0;
    for (double v : comp_[c]) s += v;
    m[c] = s / static_cast<double>(size());
  }
  return m;
}

bool VectorField::all_finite() const {
  for (const auto& c : comp_)
    for (double v : c)
      if (!std::isfinite(v)) return false;
  return true;
}

VectorField& VectorField::operator+=(const VectorField& o) {
  require_same_grid(grid_, o.grid_);
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < size(); ++i) comp_[c][i] += o.comp_[c][i];
  return *this;
}

VectorField& VectorField::operator-=(const VectorField& o) {
  require_same_grid(grid_, o.grid_);
  for (int c = 0; c < 3; ++c)
    for (std::size_t i = 0; i < size(); ++i) comp_[c][i] -= o.comp_[c][i];
  return *this;
}

VectorField& VectorField::operator*=(double s) {
  for (auto& c : comp_)
    for (double& v : c) v *= s;
  return *this;
}

VectorField VectorField::constant(const Grid& grid, const Vec3& value) {
  VectorField v(grid);
  for (int c = 0; c < 3; ++c) std::fill(v.comp_[c].begin(), v.comp_[c].end(), value[c]);
  return v;
}

double inner_product(const ScalarField& a, const ScalarField& b) {
  require_same_grid(a.grid(), b.grid());
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s * a.grid().cell_volume();
}

double inner_product(const VectorField& a, const VectorField& b) {
  require_same_grid(a.grid(), b.grid());
  double s = 0.0;
  for (int c = 0; c < 3; ++c) {
    const auto& x = a.component(c);
    const auto& y = b.component(c);
    for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  }
  return s * a.grid().cell_volume();
}

double l2_norm(const ScalarField& a) { return std::sqrt(inner_product(a, a)); }
double l2_norm(const VectorField& a) { return std::sqrt(inner_product(a, a)); }

double relative_l2(const ScalarField& a, const ScalarField& b) {
  const double d = l2_norm(a - b);
  const double r = l2_norm(b);
  return r > 0.0 ? d / r : d;
}

double relative_l2(const VectorField& a, const VectorField& b) {
  const double d = l2_norm(a - b);
  const double r = l2_norm(b);
  return r > 0.0 ? d / r : d;
}

}  // namespace gaugelab
