#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <string>
#include <variant>

#include "gaugelab/fields.hpp"

namespace gaugelab {

/// Named lattice fields on one grid at one instant.
///
/// Binary layout (little-endian), version 1:
///   char[8]  magic "GLSNAP01"
///   u32      n_per_axis
///   u32      field_count
///   f64      box_length, eps0, mu0, time
///   field_count times:
///     u32    name length, then the name bytes (no terminator)
///     u32    components (1 or 3)
///     f64    n^3 * components values, site-major (index = (ix*n + iy)*n + iz),
///            components interleaved per site
struct Snapshot {
  using Field = std::variant<ScalarField, VectorField>;

  Grid grid;
  double time = 0.0;
  std::map<std::string, Field> fields;

  explicit Snapshot(const Grid& g, double t = 0.0) : grid(g), time(t) {}

  void put(const std::string& name, ScalarField f);
  void put(const std::string& name, VectorField f);
  const ScalarField& scalar(const std::string& name) const;
  const VectorField& vector(const std::string& name) const;
  bool has(const std::string& name) const { return fields.count(name) != 0; }
};

void write_snapshot(std::ostream& out, const Snapshot& snap);
Snapshot read_snapshot(std::istream& in);
void write_snapshot(const std::filesystem::path& path, const Snapshot& snap);
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace gaugelab
