#include "pmod4/cache.hpp"

#include <fstream>
#include <system_error>

namespace pmod4 {

namespace fs = std::filesystem;

CacheStore::CacheStore(fs::path root) : root_(std::move(root)) {}

std::optional<nlohmann::json> CacheStore::load(const std::string& rel) {
    fs::path p = root_ / rel;
    std::error_code ec;
    if (!fs::exists(p, ec)) {
        ++misses_;
        return std::nullopt;
    }
    std::ifstream in(p);
    nlohmann::json j = nlohmann::json::parse(in, nullptr, /*allow_exceptions=*/false);
    if (j.is_discarded() || !j.contains("schema") || j["schema"] != "v1") {
        fs::rename(p, fs::path(p.string() + ".corrupt"), ec);
        ++misses_;
        return std::nullopt;
    }
    ++hits_;
    return j;
}

void CacheStore::store(const std::string& rel, const nlohmann::json& payload) {
    fs::path p = root_ / rel;
    fs::create_directories(p.parent_path());
    fs::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp);
        out << payload.dump();
        out.flush();
        if (!out) throw std::runtime_error("cache write failed: " + tmp.string());
    }
    fs::rename(tmp, p);
}

}  // namespace pmod4
