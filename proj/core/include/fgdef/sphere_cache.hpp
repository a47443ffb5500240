#pragma once

#include <filesystem>
#include <optional>
#include <vector>

#include "fgdef/genericity.hpp"
#include "fgdef/word.hpp"

namespace fgdef {

/// Persistent store of enumerated spheres: one word per line in a file
/// named sphere_r{rank}_n{n}.txt.
class SphereCache {
 public:
  explicit SphereCache(std::filesystem::path directory);

  const std::filesystem::path& directory() const { return directory_; }
  std::filesystem::path file_for(const BallSpec& spec) const;

  // Missing file: nullopt. A file whose line count disagrees with the sphere
  // size is rejected as corrupt.
  std::optional<std::vector<Word>> load(const BallSpec& spec) const;
  // Written to a temporary file and renamed into place.
  void store(const BallSpec& spec, const std::vector<Word>& words) const;

 private:
  std::filesystem::path directory_;
};

}  // namespace fgdef
