#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "vlab/spectral/field.hpp"

namespace vlab::spectral {

/// Named field at a time stamp, as stored on disk.
///
/// Layout (all little-endian):
///   8 bytes   magic "VLABFLD1"
///   uint32    dimension n
///   uint32    points per axis N
///   float64   half length L
///   float64   time stamp
///   uint32    name length in bytes, followed by the UTF-8 name
///   float64   N^n samples, row-major (x_1 slowest)
struct FieldSnapshot {
  std::string name;
  double time = 0.0;
  ScalarField field;
};

void write_snapshot(std::ostream& out, const FieldSnapshot& snap);
FieldSnapshot read_snapshot(std::istream& in);

void write_snapshot(const std::filesystem::path& path, const FieldSnapshot& snap);
FieldSnapshot read_snapshot(const std::filesystem::path& path);

}  // namespace vlab::spectral
