#pragma once

// Named-tensor container for model artifacts. One file holds any number of
// float32/float64 tensors keyed by name; layout is little-endian and
// position-independent:
//
//   "SNTW" | u32 version | u32 tensor count
//   per tensor: u32 name_len | name | u8 dtype (0=f32, 1=f64) | u32 rank |
//               u64 dims[rank] | raw payload
//
// The baseline stores f64 so persisted predictions round-trip bit-exactly;
// the transformer uses f32.

#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <map>
#include <string>
#include <vector>

#include "sentinel/common.hpp"

namespace sentinel {

static_assert(std::endian::native == std::endian::little,
              "weights files are little-endian; big-endian hosts need byte swaps");

struct Tensor {
  std::vector<uint64_t> dims;
  std::vector<float> f32;
  std::vector<double> f64;

  bool is_f64() const { return !f64.empty() || f32.empty(); }
  size_t element_count() const {
    size_t n = 1;
    for (uint64_t d : dims) n *= static_cast<size_t>(d);
    return dims.empty() ? 0 : n;
  }
};

using WeightsMap = std::map<std::string, Tensor>;

namespace weights_detail {

template <typename T>
void put(std::string& out, T v) {
  char buf[sizeof v];
  std::memcpy(buf, &v, sizeof v);
  out.append(buf, sizeof v);
}

template <typename T>
T take(const std::string& in, size_t& pos) {
  if (pos + sizeof(T) > in.size()) throw contract_error("weights file truncated");
  T v;
  std::memcpy(&v, in.data() + pos, sizeof v);
  pos += sizeof v;
  return v;
}

}  // namespace weights_detail

inline void write_weights(const std::string& path, const WeightsMap& weights) {
  using weights_detail::put;
  std::string out;
  out += "SNTW";
  put<uint32_t>(out, 1);
  put<uint32_t>(out, static_cast<uint32_t>(weights.size()));
  for (const auto& [name, t] : weights) {
    put<uint32_t>(out, static_cast<uint32_t>(name.size()));
    out += name;
    bool f64 = t.is_f64();
    out.push_back(f64 ? 1 : 0);
    put<uint32_t>(out, static_cast<uint32_t>(t.dims.size()));
    for (uint64_t d : t.dims) put<uint64_t>(out, d);
    size_t n = t.element_count();
    if (n != (f64 ? t.f64.size() : t.f32.size()))
      throw contract_error("tensor '" + name + "' payload does not match its dims");
    if (f64)
      out.append(reinterpret_cast<const char*>(t.f64.data()), n * sizeof(double));
    else
      out.append(reinterpret_cast<const char*>(t.f32.data()), n * sizeof(float));
  }
  write_file(path, out);
}

inline WeightsMap read_weights(const std::string& path) {
  using weights_detail::take;
  std::string in = read_file(path);
  size_t pos = 0;
  if (in.size() < 4 || in.compare(0, 4, "SNTW") != 0)
    throw contract_error("weights file has bad magic: " + path);
  pos = 4;
  auto version = take<uint32_t>(in, pos);
  if (version != 1)
    throw contract_error("weights file version " + std::to_string(version) + " unsupported");
  auto count = take<uint32_t>(in, pos);
  WeightsMap out;
  for (uint32_t i = 0; i < count; ++i) {
    auto name_len = take<uint32_t>(in, pos);
    if (pos + name_len > in.size()) throw contract_error("weights file truncated");
    std::string name = in.substr(pos, name_len);
    pos += name_len;
    auto dtype = take<uint8_t>(in, pos);
    if (dtype > 1) throw contract_error("tensor '" + name + "' has unknown dtype");
    auto rank = take<uint32_t>(in, pos);
    Tensor t;
    for (uint32_t r = 0; r < rank; ++r) t.dims.push_back(take<uint64_t>(in, pos));
    size_t n = t.element_count();
    size_t bytes = n * (dtype == 1 ? sizeof(double) : sizeof(float));
    if (pos + bytes > in.size()) throw contract_error("weights file truncated in '" + name + "'");
    if (dtype == 1) {
      t.f64.resize(n);
      std::memcpy(t.f64.data(), in.data() + pos, bytes);
    } else {
      t.f32.resize(n);
      std::memcpy(t.f32.data(), in.data() + pos, bytes);
    }
    pos += bytes;
    out.emplace(std::move(name), std::move(t));
  }
  return out;
}

}  // namespace sentinel
