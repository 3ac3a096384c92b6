#pragma once

#include <cstdint>
#include <filesystem>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "motsq/grading.hpp"

namespace motsq {

inline constexpr int kCacheVersion = 1;

struct CachedGroup {
    std::uint64_t basis_hash = 0;
    std::size_t basis_size = 0;
    std::vector<std::vector<std::uint32_t>> reps;   // basis indices of each representative
};

std::uint64_t fnv1a(const std::string& s);

// Write via a temporary file in the same directory followed by rename.
void atomic_write(const std::filesystem::path& path, const std::string& contents);

/* One text record per tridegree under <root>/<hash of params>/. Records carry a versioned
   header, the parameter string, the basis hash and a checksum; anything that fails to
   verify is reported as a miss and later overwritten. */
class ExtCache {
public:
    ExtCache(std::filesystem::path root, std::string params);

    const std::filesystem::path& directory() const { return dir_; }
    std::optional<CachedGroup> load(TriDegree t, std::uint64_t basis_hash, std::size_t basis_size);
    void store(TriDegree t, const CachedGroup& g);
    std::size_t rejected() const { return rejected_; }

    std::filesystem::path record_path(TriDegree t) const;

private:
    std::filesystem::path dir_;
    std::string params_;
    std::mutex mu_;
    std::size_t rejected_ = 0;
};

}  // namespace motsq
