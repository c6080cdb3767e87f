#pragma once

#include <cstdint>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace gridcap {

using i64 = int64_t;
using u64 = uint64_t;
using u32 = uint32_t;
using u8 = uint8_t;

// Error taxonomy maps onto CLI exit codes: usage=1, data=2, numerical=3.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// FNV-1a, used for content stamps and RNG stream splitting.
inline u64 fnv1a(const void* data, size_t n, u64 h = 1469598103934665603ULL) {
  auto* p = static_cast<const unsigned char*>(data);
  for (size_t i = 0; i < n; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

inline u64 fnv1a_str(const std::string& s, u64 h = 1469598103934665603ULL) {
  return fnv1a(s.data(), s.size(), h);
}

// Deterministic RNG. mt19937_64's output sequence is fixed by the standard;
// all distribution transforms are done by hand so streams are identical
// across platforms and library versions.
class Rng {
 public:
  explicit Rng(u64 seed) : base_(seed), gen_(seed) {}

  u64 next() { return gen_(); }

  // uniform in [0,1)
  double uniform() { return (next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive integer range
  i64 randint(i64 lo, i64 hi) {
    if (hi < lo) throw DataError("randint: empty range");
    u64 span = static_cast<u64>(hi - lo) + 1;
    // rejection sampling to avoid modulo bias
    u64 limit = UINT64_MAX - UINT64_MAX % span;
    u64 x;
    do {
      x = next();
    } while (x >= limit);
    return lo + static_cast<i64>(x % span);
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = 0.0, u2;
    while (u1 == 0.0) u1 = uniform();
    u2 = uniform();
    double r = std::sqrt(-2.0 * std::log(u1));
    double a = 2.0 * M_PI * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  // Independent child stream; deterministic in (base seed, salt).
  Rng fork(u64 salt) const {
    u64 h = fnv1a(&base_, sizeof(base_));
    h = fnv1a(&salt, sizeof(salt), h);
    return Rng(h);
  }

  u64 base_seed() const { return base_; }

 private:
  u64 base_;
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

template <class T>
inline void check_finite(const std::vector<T>& v, const char* where) {
  for (size_t i = 0; i < v.size(); ++i) {
    if (!std::isfinite(static_cast<double>(v[i]))) {
      throw NumericError(std::string("non-finite value at ") + where +
                         " index " + std::to_string(i));
    }
  }
}

}  // namespace gridcap
