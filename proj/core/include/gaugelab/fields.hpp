#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "gaugelab/grid.hpp"
#include "gaugelab/vec3.hpp"

namespace gaugelab {

/// Real scalar samples, one per lattice site.
class ScalarField {
 public:
  explicit ScalarField(const Grid& grid);
  ScalarField(const Grid& grid, std::vector<double> values);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }
  double& operator[](std::size_t i) { return values_[i]; }
  const std::vector<double>& values() const { return values_; }
  std::vector<double>& values() { return values_; }

  double mean() const;
  bool all_finite() const;

  ScalarField& operator+=(const ScalarField& o);
  ScalarField& operator-=(const ScalarField& o);
  ScalarField& operator*=(double s);
  friend ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
  friend ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
  friend ScalarField operator*(ScalarField a, double s) { return a *= s; }
  friend ScalarField operator*(double s, ScalarField a) { return a *= s; }

 private:
  Grid grid_;
  std::vector<double> values_;
};

/// Real 3-vector samples stored as three component arrays.
class VectorField {
 public:
  explicit VectorField(const Grid& grid);
  VectorField(const Grid& grid, std::array<std::vector<double>, 3> components);
  VectorField(ScalarField x, ScalarField y, ScalarField z);

  const Grid& grid() const { return grid_; }
  std::size_t size() const { return comp_[0].size(); }

  const std::vector<double>& component(int c) const { return comp_[c]; }
  std::vector<double>& component(int c) { return comp_[c]; }
  ScalarField component_field(int c) const { return ScalarField(grid_, comp_[c]); }

  Vec3 at(std::size_t i) const { return {comp_[0][i], comp_[1][i], comp_[2][i]}; }
  void set(std::size_t i, const Vec3& v) {
    comp_[0][i] = v.x;
    comp_[1][i] = v.y;
    comp_[2][i] = v.z;
  }
  void add(std::size_t i, const Vec3& v) {
    comp_[0][i] += v.x;
    comp_[1][i] += v.y;
    comp_[2][i] += v.z;
  }

  Vec3 mean() const;
  bool all_finite() const;

  VectorField& operator+=(const VectorField& o);
  VectorField& operator-=(const VectorField& o);
  VectorField& operator*=(double s);
  friend VectorField operator+(VectorField a, const VectorField& b) { return a += b; }
  friend VectorField operator-(VectorField a, const VectorField& b) { return a -= b; }
  friend VectorField operator*(VectorField a, double s) { return a *= s; }
  friend VectorField operator*(double s, VectorField a) { return a *= s; }
  friend VectorField operator-(VectorField a) { return a *= -1.0; }

  static VectorField constant(const Grid& grid, const Vec3& value);

 private:
  Grid grid_;
  std::array<std::vector<double>, 3> comp_;
};

/// Lattice realization of the volume integral: cell_volume * sum over sites of a*b.
double inner_product(const ScalarField& a, const ScalarField& b);
double inner_product(const VectorField& a, const VectorField& b);

/// sqrt(inner_product(a, a)).
double l2_norm(const ScalarField& a);
double l2_norm(const VectorField& a);

/// ||a - b|| / ||b||, or ||a - b|| when ||b|| == 0.
double relative_l2(const ScalarField& a, const ScalarField& b);
double relative_l2(const VectorField& a, const VectorField& b);

}  // namespace gaugelab
