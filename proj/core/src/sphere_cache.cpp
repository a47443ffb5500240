#include "fgdef/sphere_cache.hpp"

#include <fstream>
#include <string>

#include "fgdef/errors.hpp"

namespace fgdef {

namespace fs = std::filesystem;

SphereCache::SphereCache(fs::path directory) : directory_(std::move(directory)) {
  std::error_code ec;
  fs::create_directories(directory_, ec);
  if (ec) throw InputError("cannot create cache directory " + directory_.string() + ": " + ec.message());
}

fs::path SphereCache::file_for(const BallSpec& spec) const {
  return directory_ / ("sphere_r" + std::to_string(spec.rank) + "_n" + std::to_string(spec.radius) + ".txt");
}

std::optional<std::vector<Word>> SphereCache::load(const BallSpec& spec) const {
  const auto path = file_for(spec);
  std::ifstream in(path);
  if (!in) return std::nullopt;
  const Alphabet alphabet(spec.rank);
  std::vector<Word> words;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    Word w = parse_reduced_word(line, alphabet);
    if (w.size() != static_cast<std::size_t>(spec.radius)) {
      throw InputError("corrupt cache file " + path.string() + ": word of wrong length '" + line + "'");
    }
    words.push_back(std::move(w));
  }
  if (BigInt(words.size()) != sphere_count(spec)) {
    throw InputError("corrupt cache file " + path.string() + ": expected " + sphere_count(spec).str() +
                     " words, found " + std::to_string(words.size()));
  }
  return words;
}

void SphereCache::store(const BallSpec& spec, const std::vector<Word>& words) const {
  const auto path = file_for(spec);
  auto tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw InputError("cannot write cache file " + tmp.string());
    for (const Word& w : words) out << to_string(w) << '\n';
  }
  std::error_code ec;
  fs::rename(tmp, path, ec);
  if (ec) throw InputError("cannot move cache file into place: " + ec.message());
}

}  // namespace fgdef
