#include "vlab/spectral/snapshot.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace vlab::spectral {
namespace {

constexpr std::array<char, 8> kMagic = {'V', 'L', 'A', 'B', 'F', 'L', 'D', '1'};

template <typename T>
void put(std::ostream& out, T value) {
  std::array<char, sizeof(T)> bytes;
  std::memcpy(bytes.data(), &value, sizeof(T));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(bytes.data(), bytes.size());
}

template <typename T>
T get(std::istream& in) {
  std::array<char, sizeof(T)> bytes;
  if (!in.read(bytes.data(), bytes.size())) throw std::runtime_error("truncated field snapshot");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  T value;
  std::memcpy(&value, bytes.data(), sizeof(T));
  return value;
}

}  // namespace

void write_snapshot(std::ostream& out, const FieldSnapshot& snap) {
  const auto& grid = snap.field.grid();
  out.write(kMagic.data(), kMagic.size());
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.dimension()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(grid.points()));
  put<double>(out, grid.half_length());
  put<double>(out, snap.time);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(snap.name.size()));
  out.write(snap.name.data(), static_cast<std::streamsize>(snap.name.size()));
  for (double v : snap.field.values()) put<double>(out, v);
  if (!out) throw std::runtime_error("failed writing field snapshot");
}

FieldSnapshot read_snapshot(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) {
    throw std::runtime_error("not a field snapshot (bad magic)");
  }
  const auto dim = get<std::uint32_t>(in);
  const auto points = get<std::uint32_t>(in);
  const auto half_length = get<double>(in);
  const auto time = get<double>(in);
  const auto name_len = get<std::uint32_t>(in);
  if (name_len > (1u << 20)) throw std::runtime_error("field snapshot name too long");
  std::string name(name_len, '\0');
  if (name_len > 0 && !in.read(name.data(), name_len)) throw std::runtime_error("truncated field snapshot");
  const GridSpec grid(static_cast<int>(dim), static_cast<int>(points), half_length);
  std::vector<double> values(grid.size());
  for (auto& v : values) v = get<double>(in);
  return FieldSnapshot{std::move(name), time, ScalarField(grid, std::move(values))};
}

void write_snapshot(const std::filesystem::path& path, const FieldSnapshot& snap) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  write_snapshot(out, snap);
}

FieldSnapshot read_snapshot(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return read_snapshot(in);
}

}  // namespace vlab::spectral
