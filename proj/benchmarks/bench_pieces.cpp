#include <benchmark/benchmark.h>

#include <random>

#include "fgdef/genericity.hpp"
#include "fgdef/pieces.hpp"

namespace {

using fgdef::Letter;
using fgdef::Word;

// Quadratic scan over all subwords, counting occurrences of each.
std::size_t naive_longest_piece(std::span<const Letter> w) {
  const std::size_t n = w.size();
  for (std::size_t len = n; len >= 1; --len) {
    for (std::size_t p = 0; p + len <= n; ++p) {
      std::size_t count = 0;
      for (std::size_t q = 0; q + len <= n && count < 2; ++q) {
        bool fwd = true, inv = true;
        for (std::size_t i = 0; i < len && (fwd || inv); ++i) {
          fwd = fwd && w[q + i] == w[p + i];
          inv = inv && w[q + i] == w[p + len - 1 - i].inverse();
        }
        count += static_cast<std::size_t>(fwd) + static_cast<std::size_t>(inv);
      }
      if (count >= 2) return len;
    }
  }
  return 0;
}

std::vector<Word> corpus(int length) {
  std::mt19937_64 rng(17);
  std::vector<Word> out;
  for (int i = 0; i < 64; ++i) out.push_back(fgdef::random_word({2, length}, rng));
  return out;
}

void BM_LongestPieceSuffixArray(benchmark::State& state) {
  const auto words = corpus(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(fgdef::longest_piece_length(words[i++ % words.size()].letters()));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LongestPieceSuffixArray)->RangeMultiplier(4)->Range(16, 4096)->Complexity();

void BM_LongestPieceNaive(benchmark::State& state) {
  const auto words = corpus(static_cast<int>(state.range(0)));
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(naive_longest_piece(words[i++ % words.size()].letters()));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_LongestPieceNaive)->RangeMultiplier(4)->Range(16, 256)->Complexity();

}  // namespace
