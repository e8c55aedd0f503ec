#ifndef SCINT_CACHE_HPP
#define SCINT_CACHE_HPP

#include <filesystem>
#include <functional>
#include <string>

#include <json.hpp>

namespace scint {

/// Content-addressed on-disk cache for expensive integrals. The key is the
/// canonical JSON of (module, parameters, tolerances, seed, code version);
/// entries store the full key beside the result, so a hash collision is
/// detected by comparing keys and treated as a miss. Writes are atomic
/// (write-to-temp then rename), making concurrent processes sharing a
/// directory safe. Deleting the directory at any time is harmless.
class Cache {
  public:
    explicit Cache(std::filesystem::path dir);

    /// Returns the cached result for key, or computes, stores, and returns.
    /// hit reports whether the value came from disk.
    nlohmann::json get_or_compute(const nlohmann::json& key,
                                  const std::function<nlohmann::json()>& compute,
                                  bool* hit = nullptr);

    const std::filesystem::path& dir() const { return dir_; }

  private:
    std::filesystem::path dir_;
    std::filesystem::path path_for(const nlohmann::json& key) const;
};

} // namespace scint

#endif
