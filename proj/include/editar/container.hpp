#pragma once

// Binary container shared by codebook and checkpoint files:
//   8-byte magic | u64 LE manifest length | manifest JSON | payload
// The manifest is canonical JSON (sorted keys) and carries the CRC-32 of
// the payload under "payload_crc32".

#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "json.hpp"

namespace editar {

using Json = nlohmann::json;

std::uint32_t crc32_of(std::string_view bytes);

std::string pack_container(std::string_view magic, Json manifest, std::string_view payload);

struct Container {
  Json manifest;
  std::string payload;
};

// Checks magic, framing and checksum; `what` names the source in errors.
Container unpack_container(std::string_view bytes, std::string_view magic, const std::string& what);

void append_f32(std::string& out, std::span<const double> values);
void append_f64(std::string& out, std::span<const double> values);
std::vector<double> read_f32(std::string_view payload, std::size_t offset, std::size_t count, const std::string& what);
std::vector<double> read_f64(std::string_view payload, std::size_t offset, std::size_t count, const std::string& what);

void put_u32(std::string& out, std::uint32_t v);
void put_u64(std::string& out, std::uint64_t v);
std::uint32_t get_u32(std::string_view in, std::size_t at);
std::uint64_t get_u64(std::string_view in, std::size_t at);

// Typed manifest field access with a data error on absence or mismatch.
template <typename T>
T field(const Json& j, const char* key, const std::string& what);

}  // namespace editar
