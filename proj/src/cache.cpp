#include "icx/cache.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>

#include "icx/error.hpp"

namespace icx {

namespace {

[[noreturn]] void corrupt(const std::string& why) { throw Error(ErrorKind::corrupt_cache, why); }

}  // namespace

std::vector<std::uint8_t> encode_cache(const ComplexityTable& table) {
  const auto body = table.bytes();
  std::vector<std::uint8_t> out;
  out.reserve(kCacheHeaderSize + body.size());
  out.insert(out.end(), std::begin(kCacheMagic), std::end(kCacheMagic));
  const std::uint64_t limit = table.limit();
  for (int i = 0; i < 8; ++i) out.push_back(static_cast<std::uint8_t>(limit >> (8 * i)));
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

ComplexityTable decode_cache(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kCacheHeaderSize) corrupt("cache shorter than its 12-byte header");
  if (!std::equal(std::begin(kCacheMagic), std::end(kCacheMagic), bytes.begin(),
                  [](char m, std::uint8_t b) { return static_cast<std::uint8_t>(m) == b; })) {
    corrupt("bad cache magic");
  }
  std::uint64_t limit = 0;
  for (int i = 0; i < 8; ++i) limit |= std::uint64_t{bytes[4 + i]} << (8 * i);
  const auto body = bytes.subspan(kCacheHeaderSize);
  if (body.size() != limit) {
    corrupt("cache header says " + std::to_string(limit) + " entries but body has " + std::to_string(body.size()));
  }
  if (limit == 0 || body[0] != 1) corrupt("cache entry for n = 1 must be 1");
  return ComplexityTable(std::vector<std::uint8_t>(body.begin(), body.end()));
}

void write_cache(const std::filesystem::path& path, const ComplexityTable& table) {
  const auto bytes = encode_cache(table);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::invalid_argument, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw Error(ErrorKind::invalid_argument, "failed writing " + path.string());
}

ComplexityTable read_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::corrupt_cache, "cannot open cache " + path.string());
  const std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return decode_cache(bytes);
}

}  // namespace icx
