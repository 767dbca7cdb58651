#include "hitcalc/store/cache.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "hitcalc/errors.hpp"

namespace hitcalc::store {

namespace {

constexpr char kMagic[4] = {'H', 'P', 'B', '1'};
constexpr std::uint32_t kVersion = 1;
constexpr std::size_t kHeader = 4 + 4 * 4 + 8 * 2;

template <class T>
void put(std::string& out, T v)
{
    for (std::size_t i = 0; i < sizeof(T); ++i)
        out.push_back(static_cast<char>((static_cast<std::uint64_t>(v) >> (8 * i)) & 0xff));
}

template <class T>
T get(std::string_view in, std::size_t& pos)
{
    std::uint64_t v = 0;
    for (std::size_t i = 0; i < sizeof(T); ++i)
        v |= static_cast<std::uint64_t>(static_cast<unsigned char>(in[pos + i])) << (8 * i);
    pos += sizeof(T);
    return static_cast<T>(v);
}

const char* kind_name(CacheKind k)
{
    switch (k) {
    case CacheKind::Hit:
        return "hit";
    case CacheKind::Primitive:
        return "primitive";
    case CacheKind::LambdaBidegree:
        return "lambda";
    }
    return "unknown";
}

}  // namespace

std::string encode(const CacheEntry& entry)
{
    const std::size_t words = gf2::words_for(entry.m);
    std::string out;
    out.reserve(kHeader + entry.rows.size() * words * 8);
    out.append(kMagic, 4);
    put<std::uint32_t>(out, kVersion);
    put<std::uint32_t>(out, static_cast<std::uint32_t>(entry.kind));
    put<std::uint32_t>(out, entry.n);
    put<std::uint32_t>(out, entry.d);
    put<std::uint64_t>(out, entry.m);
    put<std::uint64_t>(out, entry.rows.size());
    for (const gf2::BitRow& r : entry.rows) {
        if (r.length() != entry.m)
            throw DimensionError("cache row of length " + std::to_string(r.length()) + " in an entry of width " +
                                 std::to_string(entry.m));
        for (gf2::Word w : r.words())
            put<std::uint64_t>(out, w);
    }
    return out;
}

std::optional<CacheEntry> decode(std::string_view bytes)
{
    if (bytes.size() < kHeader || std::memcmp(bytes.data(), kMagic, 4) != 0)
        return std::nullopt;
    std::size_t pos = 4;
    if (get<std::uint32_t>(bytes, pos) != kVersion)
        return std::nullopt;
    const auto kind = get<std::uint32_t>(bytes, pos);
    if (kind > 2)
        return std::nullopt;
    CacheEntry e;
    e.kind = static_cast<CacheKind>(kind);
    e.n = get<std::uint32_t>(bytes, pos);
    e.d = get<std::uint32_t>(bytes, pos);
    e.m = get<std::uint64_t>(bytes, pos);
    const auto r = get<std::uint64_t>(bytes, pos);
    const std::uint64_t words = gf2::words_for(e.m);
    if (e.m > (std::uint64_t{1} << 40) || (words && r > (bytes.size() - kHeader) / (8 * words)) ||
        bytes.size() != kHeader + r * words * 8)
        return std::nullopt;
    e.rows.reserve(r);
    for (std::uint64_t i = 0; i < r; ++i) {
        gf2::BitRow row(e.m);
        for (gf2::Word& w : row.words())
            w = get<std::uint64_t>(bytes, pos);
        if (e.m % gf2::kWordBits && (row.words().back() >> (e.m % gf2::kWordBits)) != 0)
            return std::nullopt;
        e.rows.push_back(std::move(row));
    }
    return e;
}

Cache::Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

Cache Cache::from_env()
{
    const char* env = std::getenv("HITCALC_CACHE");
    return Cache(env && *env ? std::filesystem::path(env) : std::filesystem::path(".hitcalc-cache"));
}

std::filesystem::path Cache::path_for(CacheKind kind, std::uint32_t n, std::uint32_t d) const
{
    return dir_ / (std::string(kind_name(kind)) + "-" + std::to_string(n) + "-" + std::to_string(d) + ".hpb");
}

std::optional<CacheEntry> Cache::load(CacheKind kind, std::uint32_t n, std::uint32_t d, std::uint64_t m) const
{
    const auto path = path_for(kind, n, d);
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    auto e = decode(bytes);
    if (!e || e->kind != kind || e->n != n || e->d != d || e->m != m) {
        std::cerr << "warning: ignoring corrupt cache entry " << path.string() << "\n";
        return std::nullopt;
    }
    return e;
}

void Cache::store(const CacheEntry& entry) const
{
    static std::atomic<unsigned> counter{0};
    std::filesystem::create_directories(dir_);
    const auto final_path = path_for(entry.kind, entry.n, entry.d);
    std::ostringstream tmp_name;
    tmp_name << final_path.filename().string() << ".tmp." << ::getpid() << "."
             << std::hash<std::thread::id>{}(std::this_thread::get_id()) << "." << counter++;
    const auto tmp = dir_ / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        const std::string bytes = encode(entry);
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        out.flush();
        if (!out) {
            std::error_code ec;
            std::filesystem::remove(tmp, ec);
            throw std::runtime_error("cannot write cache file " + tmp.string());
        }
    }
    std::filesystem::rename(tmp, final_path);
}

}  // namespace hitcalc::store
