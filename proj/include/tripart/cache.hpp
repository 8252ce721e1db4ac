#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "tripart/enumerate.hpp"

namespace tripart {

/// Enumeration cache entry for one (n, predicate).
///
/// Layout inside the cache directory:
///   n<N>-<predicate>.records        one block per class: "@ aut=<k> flags=<f,...>"
///                                   followed by the system in canonical labeling,
///                                   in the plain system file format
///   n<N>-<predicate>.manifest.json  tool version, counts and CRC-32 of the records file
struct CacheManifest {
    std::string tool_version;
    std::string predicate;
    int n = 0;
    std::uint64_t classes = 0;
    BigInt labeled_total = 0;
    std::uint32_t checksum = 0;
    std::vector<std::uint64_t> classes_by_edges;
    std::vector<BigInt> labeled_by_edges;
};

/// No cache entry for the requested (n, predicate).
class CacheMissing : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::filesystem::path cache_records_path(const std::filesystem::path& dir, int n, const std::string& predicate);
std::filesystem::path cache_manifest_path(const std::filesystem::path& dir, int n, const std::string& predicate);
bool cache_exists(const std::filesystem::path& dir, int n, const std::string& predicate);

std::string serialize_records(const std::vector<EnumRecord>& records);
/// Throws ParseError on malformed content.
std::vector<EnumRecord> parse_records(const std::string& text, int n);

CacheManifest cache_write(const std::filesystem::path& dir, int n, const std::string& predicate,
                          const std::vector<EnumRecord>& records);

struct CacheEntry {
    CacheManifest manifest;
    std::vector<EnumRecord> records;
};

/// Verifies the checksum, the manifest counts and that every stored system is
/// its own canonical form. Throws CacheMissing or ChecksumMismatch.
CacheEntry cache_read(const std::filesystem::path& dir, int n, const std::string& predicate);

std::uint32_t crc32_of(const std::string& bytes);

} // namespace tripart
