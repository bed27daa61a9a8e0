#include "gaugelab/snapshot.hpp"

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

#include "gaugelab/errors.hpp"

namespace gaugelab {

static_assert(std::endian::native == std::endian::little, "snapshot I/O assumes a little-endian host");

namespace {

constexpr char kMagic[8] = {'G', 'L', 'S', 'N', 'A', 'P', '0', '1'};

template <typename T>
void put_raw(std::ostream& out, const T& v) {
  out.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get_raw(std::istream& in) {
  T v{};
  in.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!in) throw FormatError("snapshot: truncated stream");
  return v;
}

}  // namespace

void Snapshot::put(const std::string& name, ScalarField f) {
  require_same_grid(grid, f.grid());
  fields.insert_or_assign(name, Field(std::move(f)));
}

void Snapshot::put(const std::string& name, VectorField f) {
  require_same_grid(grid, f.grid());
  fields.insert_or_assign(name, Field(std::move(f)));
}

const ScalarField& Snapshot::scalar(const std::string& name) const {
  auto it = fields.find(name);
  if (it == fields.end()) throw FormatError("snapshot: missing field '" + name + "'");
  if (const auto* s = std::get_if<ScalarField>(&it->second)) return *s;
  throw FormatError("snapshot: field '" + name + "' is not scalar");
}

const VectorField& Snapshot::vector(const std::string& name) const {
  auto it = fields.find(name);
  if (it == fields.end()) throw FormatError("snapshot: missing field '" + name + "'");
  if (const auto* v = std::get_if<VectorField>(&it->second)) return *v;
  throw FormatError("snapshot: field '" + name + "' is not a vector field");
}

void write_snapshot(std::ostream& out, const Snapshot& snap) {
  out.write(kMagic, sizeof(kMagic));
  put_raw<std::uint32_t>(out, static_cast<std::uint32_t>(snap.grid.n()));
  put_raw<std::uint32_t>(out, static_cast<std::uint32_t>(snap.fields.size()));
  put_raw<double>(out, snap.grid.length());
  put_raw<double>(out, snap.grid.eps0());
  put_raw<double>(out, snap.grid.mu0());
  put_raw<double>(out, snap.time);
  for (const auto& [name, field] : snap.fields) {
    put_raw<std::uint32_t>(out, static_cast<std::uint32_t>(name.size()));
    out.write(name.data(), static_cast<std::streamsize>(name.size()));
    if (const auto* s = std::get_if<ScalarField>(&field)) {
      put_raw<std::uint32_t>(out, 1);
      out.write(reinterpret_cast<const char*>(s->values().data()),
                static_cast<std::streamsize>(s->size() * sizeof(double)));
    } else {
      const auto& v = std::get<VectorField>(field);
      put_raw<std::uint32_t>(out, 3);
      std::vector<double> buf(3 * v.size());
      for (std::size_t i = 0; i < v.size(); ++i)
        for (int c = 0; c < 3; ++c) buf[3 * i + c] = v.component(c)[i];
      out.write(reinterpret_cast<const char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(double)));
    }
  }
  if (!out) throw FormatError("snapshot: write failed");
}

Snapshot read_snapshot(std::istream& in) {
  char magic[8];
  in.read(magic, sizeof(magic));
  if (!in || std::memcmp(magic, kMagic, sizeof(kMagic)) != 0) throw FormatError("snapshot: bad magic");
  const auto n = get_raw<std::uint32_t>(in);
  const auto count = get_raw<std::uint32_t>(in);
  const double length = get_raw<double>(in);
  const double eps0 = get_raw<double>(in);
  const double mu0 = get_raw<double>(in);
  const double time = get_raw<double>(in);
  if (n > 2048) throw FormatError("snapshot: implausible n_per_axis");
  Snapshot snap(Grid(static_cast<int>(n), length, eps0, mu0), time);
  for (std::uint32_t f = 0; f < count; ++f) {
    const auto len = get_raw<std::uint32_t>(in);
    if (len > 4096) throw FormatError("snapshot: implausible field name length");
    std::string name(len, '\0');
    in.read(name.data(), len);
    const auto comps = get_raw<std::uint32_t>(in);
    if (comps != 1 && comps != 3) throw FormatError("snapshot: field '" + name + "' has bad component count");
    std::vector<double> buf(comps * snap.grid.size());
    in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(buf.size() * sizeof(double)));
    if (!in) throw FormatError("snapshot: truncated field '" + name + "'");
    if (comps == 1) {
      snap.put(name, ScalarField(snap.grid, std::move(buf)));
    } else {
      VectorField v(snap.grid);
      for (std::size_t i = 0; i < v.size(); ++i)
        for (int c = 0; c < 3; ++c) v.component(c)[i] = buf[3 * i + c];
      snap.put(name, std::move(v));
    }
  }
  return snap;
}

void write_snapshot(const std::filesystem::path& path, const Snapshot& snap) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw FormatError("snapshot: cannot open " + path.string() + " for writing");
  write_snapshot(out, snap);
}

Snapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FormatError("snapshot: cannot open " + path.string());
  return read_snapshot(in);
}

}  // namespace gaugelab
