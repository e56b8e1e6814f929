#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "icx/complexity_table.hpp"

namespace icx {

// Cache layout: "ICX1", limit as u64 little-endian, then `limit` bytes where
// byte i - 1 holds ||i||.
inline constexpr char kCacheMagic[4] = {'I', 'C', 'X', '1'};
inline constexpr std::size_t kCacheHeaderSize = 12;

std::vector<std::uint8_t> encode_cache(const ComplexityTable& table);

/// Throws corrupt-cache on a bad magic, a short or overlong body, or a first
/// entry other than ||1|| = 1.
ComplexityTable decode_cache(std::span<const std::uint8_t> bytes);

void write_cache(const std::filesystem::path& path, const ComplexityTable& table);
ComplexityTable read_cache(const std::filesystem::path& path);

}  // namespace icx
