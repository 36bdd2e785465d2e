#ifndef HAMEX_RNG_HPP
#define HAMEX_RNG_HPP

#include <cstdint>
#include <random>
#include <string_view>

namespace hamex {

// splitmix64 step; used for seed mixing only.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent stream seed from (master, purpose, index).
//
// Mixing function: FNV-1a over the purpose tag folded into the master via
// splitmix64, then the index mixed in with one more splitmix64 round. Every
// experiment derives its per-sample seeds through this function so results
// do not depend on worker count or scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view purpose,
                                 std::uint64_t index) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : purpose) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t s = master ^ h;
  std::uint64_t a = splitmix64(s);
  s ^= index + 0x9e3779b97f4a7c15ULL * (index + 1);
  std::uint64_t b = splitmix64(s);
  return a ^ (b + 0x632be59bd9b4e019ULL);
}

// Deterministic RNG wrapper. The engine (mt19937_64) has a standardized
// output sequence; bounded integers and unit doubles are produced with our
// own conversions because std distributions are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Unbiased integer in [0, bound) via rejection sampling. bound >= 1.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do {
      x = eng_();
    } while (x >= limit);
    return x % bound;
  }

  // Double in [0,1) with 53 random mantissa bits.
  double unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  bool bernoulli(double p) { return unit() < p; }

 private:
  std::mt19937_64 eng_;
};

}  // namespace hamex

#endif
