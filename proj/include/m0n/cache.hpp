#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "m0n/monomial.hpp"
#include "m0n/relations.hpp"

namespace m0n {

/// Bumped whenever the payload layout or the rewriting engine changes.
inline constexpr int kCacheFormatVersion = 1;

/// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

/// Hash of the serialized relations (canonical rendering, in generation order).
std::string relation_set_hash(const RelationSet& rs);

struct CacheKey {
    /// "reduction" or "pairing".
    std::string kind;
    int n = 0;
    int d = 0;
    std::string relations_hash;
    OrderConvention convention = kDefaultConvention;

    std::string file_name() const;
};

enum class CacheLookup { Hit, Miss, Corrupt, Stale, Disabled };

std::string_view to_string(CacheLookup s);

/// Directory of single-entry files: a text header (format version, key,
/// payload length and SHA-256) followed by the payload.  Writes go to a
/// temporary file that is renamed into place.
class Cache {
public:
    /// An empty path gives a disabled cache.  A directory that cannot be
    /// created or written disables the cache and prints one warning to `warn`.
    explicit Cache(std::filesystem::path dir = {}, std::ostream* warn = nullptr);

    bool enabled() const { return enabled_; }
    const std::filesystem::path& directory() const { return dir_; }

    /// The payload on an exact key match with intact checksum.
    std::optional<std::string> load(const CacheKey& key, CacheLookup* status = nullptr) const;
    /// False (with a warning) when the write fails; the cache stays usable.
    bool store(const CacheKey& key, std::string_view payload);

private:
    std::filesystem::path dir_;
    std::ostream* warn_ = nullptr;
    bool enabled_ = false;
};

}  // namespace m0n
