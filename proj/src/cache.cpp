#include "m0n/cache.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <system_error>

#include <openssl/evp.h>
#include <unistd.h>

namespace m0n {

namespace fs = std::filesystem;

std::string sha256_hex(std::string_view data)
{
    std::array<unsigned char, EVP_MAX_MD_SIZE> md{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), md.data(), &len, EVP_sha256(), nullptr) != 1)
        throw std::runtime_error("SHA-256 failed");
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int k = 0; k < len; ++k) {
        out += hex[md[k] >> 4];
        out += hex[md[k] & 15];
    }
    return out;
}

std::string relation_set_hash(const RelationSet& rs)
{
    std::string text = "n=" + std::to_string(rs.n) + " max_degree=" + std::to_string(rs.max_degree) +
                       " multi_split=" + (rs.options.multi_split ? "1" : "0") + "\n";
    for (const auto& r : rs.relations) {
        text += family_tag(r.family);
        text += ' ';
        text += render(r.poly, OrderConvention::Descending);
        text += '\n';
    }
    return sha256_hex(text);
}

std::string CacheKey::file_name() const
{
    return kind + "-n" + std::to_string(n) + "-d" + std::to_string(d) + "-" + std::string(to_string(convention)) +
           "-" + relations_hash.substr(0, 16) + ".cache";
}

std::string_view to_string(CacheLookup s)
{
    switch (s) {
    case CacheLookup::Hit: return "hit";
    case CacheLookup::Miss: return "miss";
    case CacheLookup::Corrupt: return "corrupt";
    case CacheLookup::Stale: return "stale";
    case CacheLookup::Disabled: return "disabled";
    }
    return "?";
}

namespace {

std::string header_for(const CacheKey& key, std::string_view payload)
{
    std::ostringstream h;
    h << "m0n-cache " << kCacheFormatVersion << '\n'
      << "kind " << key.kind << '\n'
      << "n " << key.n << '\n'
      << "d " << key.d << '\n'
      << "relations " << key.relations_hash << '\n'
      << "convention " << to_string(key.convention) << '\n'
      << "length " << payload.size() << '\n'
      << "sha256 " << sha256_hex(payload) << '\n'
      << "---\n";
    return h.str();
}

}  // namespace

Cache::Cache(fs::path dir, std::ostream* warn) : dir_(std::move(dir)), warn_(warn)
{
    if (dir_.empty())
        return;
    std::error_code ec;
    fs::create_directories(dir_, ec);
    const fs::path probe = dir_ / (".probe." + std::to_string(::getpid()));
    {
        std::ofstream f(probe);
        enabled_ = !ec && f.good() && (f << "x").good();
    }
    fs::remove(probe, ec);
    if (!enabled_ && warn_)
        *warn_ << "warning: cache directory " << dir_.string() << " is not writable; caching disabled\n";
}

std::optional<std::string> Cache::load(const CacheKey& key, CacheLookup* status) const
{
    auto result = [&](CacheLookup s) {
        if (status)
            *status = s;
        return std::optional<std::string>{};
    };
    if (!enabled_)
        return result(CacheLookup::Disabled);
    std::ifstream f(dir_ / key.file_name(), std::ios::binary);
    if (!f)
        return result(CacheLookup::Miss);
    std::ostringstream buf;
    buf << f.rdbuf();
    const std::string text = buf.str();

    const auto sep = text.find("\n---\n");
    if (sep == std::string::npos)
        return result(CacheLookup::Corrupt);
    std::istringstream head(text.substr(0, sep + 1));
    std::string tag, kind, rel, conv, sum;
    int version = 0, n = 0, d = 0;
    std::size_t length = 0;
    head >> tag >> version;
    if (tag != "m0n-cache")
        return result(CacheLookup::Corrupt);
    if (version != kCacheFormatVersion)
        return result(CacheLookup::Stale);
    head >> tag >> kind >> tag >> n >> tag >> d >> tag >> rel >> tag >> conv >> tag >> length >> tag >> sum;
    if (!head)
        return result(CacheLookup::Corrupt);
    if (kind != key.kind || n != key.n || d != key.d || rel != key.relations_hash ||
        conv != to_string(key.convention))
        return result(CacheLookup::Miss);
    std::string payload = text.substr(sep + 5);
    if (payload.size() != length || sha256_hex(payload) != sum)
        return result(CacheLookup::Corrupt);
    if (status)
        *status = CacheLookup::Hit;
    return payload;
}

bool Cache::store(const CacheKey& key, std::string_view payload)
{
    if (!enabled_)
        return false;
    const fs::path target = dir_ / key.file_name();
    const fs::path tmp = dir_ / (key.file_name() + ".tmp." + std::to_string(::getpid()));
    bool ok;
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        f << header_for(key, payload) << payload;
        f.flush();
        ok = f.good();
    }
    std::error_code ec;
    if (ok)
        fs::rename(tmp, target, ec);
    if (!ok || ec) {
        fs::remove(tmp, ec);
        if (warn_)
            *warn_ << "warning: could not write cache entry " << target.string() << '\n';
        return false;
    }
    return true;
}

}  // namespace m0n
