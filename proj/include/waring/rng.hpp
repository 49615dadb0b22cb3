#ifndef WARING_RNG_HPP
#define WARING_RNG_HPP

// Deterministic randomness and deterministic enumeration orders.
//
// Every seeded search in the library derives its stream from a recorded 64-bit seed
// via SplitMix64, so certificates can name the seed and a verifier can replay the
// exact sample sequence on any platform.  std::mt19937 + distributions are avoided
// on purpose: distribution output is not bit-stable across standard libraries.

#include <cstdint>
#include <numeric>
#include <vector>

#include "rational.hpp"

namespace waring {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    return mix64(state_);
  }

  // Independent child stream; does not advance this generator.
  Rng derive(std::uint64_t key) const {
    return Rng(mix64(state_ ^ (key * 0x9e3779b97f4a7c15ull + 0x632be59bd9b4e019ull)));
  }

  // Uniform-ish integer in [lo, hi] (modulo bias is irrelevant here: we only need
  // determinism and coverage, not statistical quality).
  long next_in(long lo, long hi) {
    return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
  }

  // Rational in [-radius, radius] with denominator dividing 2^20 * den(radius).
  Rat next_rat_in_ball(const Rat& radius) {
    const long grid = 1 << 20;
    return radius * make_rat(next_in(-grid, grid), grid);
  }

 private:
  std::uint64_t state_;
};

// Primitive integer pair (a, b), first nonzero component positive; represents a
// projective rational point [a : b].
struct FareyPoint {
  long a, b;
};

// Deterministic enumeration of primitive points:
//   (1,0), (0,1), (1,1), (1,-1), (2,1), (1,2), (2,-1), (1,-2), (3,1), (1,3), ...
// i.e. axes first, then for each height h the coprime pairs {h, k} (0 < k < h, plus
// k = h = 1) in both orders and both signs of the second slot.
class FareyEnumerator {
 public:
  FareyPoint next() {
    if (emitted_ < 2) {
      ++emitted_;
      return emitted_ == 1 ? FareyPoint{1, 0} : FareyPoint{0, 1};
    }
    while (queue_.empty()) refill();
    FareyPoint p = queue_.front();
    queue_.erase(queue_.begin());
    ++emitted_;
    return p;
  }

 private:
  void refill() {
    ++height_;
    const long h = height_;
    if (h == 1) {
      queue_.push_back({1, 1});
      queue_.push_back({1, -1});
      return;
    }
    for (long k = 1; k < h; ++k) {
      if (std::gcd(h, k) != 1) continue;
      queue_.push_back({h, k});
      queue_.push_back({k, h});
      queue_.push_back({h, -k});
      queue_.push_back({k, -h});
    }
  }

  long height_ = 0;
  long emitted_ = 0;
  std::vector<FareyPoint> queue_;
};

// Odometer over primitive integer tuples ordered by height (max |entry|), with the
// first nonzero entry positive.  Drives the dimension >= 3 subspace searches.
class DirectionEnumerator {
 public:
  explicit DirectionEnumerator(int dim) : dim_(dim) {}

  // Returns false when all heights up to max_height are exhausted.
  bool next(std::vector<long>& out, int max_height) {
    while (true) {
      if (!advance(max_height)) return false;
      long peak = 0;
      for (long v : current_) peak = std::max(peak, v < 0 ? -v : v);
      if (peak != height_) continue;  // only new tuples at this height
      long first = 0;
      for (long v : current_)
        if (v != 0) {
          first = v;
          break;
        }
      if (first <= 0) continue;
      long g = 0;
      for (long v : current_) g = std::gcd(g, v < 0 ? -v : v);
      if (g != 1) continue;
      out = current_;
      return true;
    }
  }

 private:
  bool advance(int max_height) {
    if (height_ == 0 || current_.empty()) {
      ++height_;
      if (height_ > max_height) return false;
      current_.assign(dim_, -height_);
      return true;
    }
    int i = dim_ - 1;
    while (i >= 0 && current_[i] == height_) {
      current_[i] = -height_;
      --i;
    }
    if (i < 0) {
      ++height_;
      if (height_ > max_height) return false;
      current_.assign(dim_, -height_);
      return true;
    }
    ++current_[i];
    return true;
  }

  int dim_;
  long height_ = 0;
  std::vector<long> current_;
};

// FNV-1a over a stream of 64-bit words; used to fingerprint replayable sample logs.
class Digest64 {
 public:
  void feed(std::uint64_t w) {
    for (int i = 0; i < 8; ++i) {
      h_ ^= (w >> (8 * i)) & 0xff;
      h_ *= 0x100000001b3ull;
    }
  }
  std::uint64_t value() const { return h_; }

 private:
  std::uint64_t h_ = 0xcbf29ce484222325ull;
};

}  // namespace waring

#endif  // WARING_RNG_HPP
