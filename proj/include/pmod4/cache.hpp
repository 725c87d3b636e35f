#ifndef PMOD4_CACHE_HPP
#define PMOD4_CACHE_HPP

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace pmod4 {

// JSON file cache under a root directory.  Writes go through a temp file and
// rename, so readers never see partial entries.  Files failing to parse or
// missing the schema tag are quarantined (renamed *.corrupt) and treated as
// misses.
class CacheStore {
  public:
    explicit CacheStore(std::filesystem::path root);

    std::optional<nlohmann::json> load(const std::string& relative_path);
    void store(const std::string& relative_path, const nlohmann::json& payload);

    const std::filesystem::path& root() const { return root_; }
    long hits() const { return hits_; }
    long misses() const { return misses_; }

  private:
    std::filesystem::path root_;
    long hits_ = 0;
    long misses_ = 0;
};

}  // namespace pmod4

#endif
