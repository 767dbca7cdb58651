#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hitcalc/gf2/bitrow.hpp"

namespace hitcalc::store {

enum class CacheKind : std::uint32_t { Hit = 0, Primitive = 1, LambdaBidegree = 2 };

// One canonical basis. For lambda entries n and d hold the length and weight.
struct CacheEntry {
    CacheKind kind = CacheKind::Hit;
    std::uint32_t n = 0;
    std::uint32_t d = 0;
    std::uint64_t m = 0;  // ambient coordinates
    std::vector<gf2::BitRow> rows;

    friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

// HPB1 layout, all little-endian: "HPB1", u32 version = 1, u32 kind, u32 n,
// u32 d, u64 m, u64 r, then r rows of ceil(m / 64) u64 words.
std::string encode(const CacheEntry& entry);
// nullopt for anything malformed: bad magic, version, kind, size, or bits
// set past m.
std::optional<CacheEntry> decode(std::string_view bytes);

class Cache {
public:
    explicit Cache(std::filesystem::path dir);
    // HITCALC_CACHE, or `.hitcalc-cache` in the working directory.
    static Cache from_env();

    const std::filesystem::path& dir() const { return dir_; }
    std::filesystem::path path_for(CacheKind kind, std::uint32_t n, std::uint32_t d) const;

    // A valid entry for the key whose width is `m`, or nullopt. Corrupt files
    // produce a warning on stderr and count as a miss.
    std::optional<CacheEntry> load(CacheKind kind, std::uint32_t n, std::uint32_t d, std::uint64_t m) const;
    // Atomic: writes a private temporary file, then renames it into place.
    void store(const CacheEntry& entry) const;

private:
    std::filesystem::path dir_;
};

}  // namespace hitcalc::store
