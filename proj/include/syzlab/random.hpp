#pragma once

#include <cstdint>
#include <random>

#include "syzlab/prime_field.hpp"

namespace syzlab {

/// Seeded generator whose draws are identical on every platform: the
/// standard mt19937_64 engine with rejection sampling, avoiding the
/// implementation-defined std distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  Residue residue(const PrimeField& f) { return static_cast<Residue>(below(f.prime())); }
  Residue nonzero_residue(const PrimeField& f) {
    return static_cast<Residue>(1 + below(f.prime() - 1));
  }

 private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer, used to derive independent child seeds.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

}  // namespace syzlab
