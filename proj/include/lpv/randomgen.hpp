#pragma once

#include <cstdint>
#include <vector>

#include "lpv/herbrand.hpp"
#include "lpv/spec.hpp"
#include "lpv/term.hpp"

namespace lpv {

/// splitmix64: tiny, portable, and identical across platforms, which keeps
/// generated fixtures byte-stable.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }
  std::uint64_t below(std::uint64_t n) { return n ? next() % n : 0; }
  bool chance(double rate) {
    return next() % 10000 < static_cast<std::uint64_t>(rate * 10000);
  }
};

/// Small random signature: up to `max_functions` function symbols (always at
/// least one constant) and up to `max_predicates` predicates of arity <= 2.
Signature random_signature(std::uint64_t seed, std::size_t max_functions = 3,
                           std::size_t max_predicates = 3);

/// Reproducible random program over the signature. Body atoms reuse head
/// variables only, so ground queries stay ground under resolution.
Program random_program(std::uint64_t seed, const Signature& sig,
                       std::size_t clause_count, std::size_t max_body_len,
                       double negation_rate);

/// Random decidable interpretation over the signature's predicates (a mix of
/// guard-based and pattern-based rules, sometimes empty or total).
SpecInterpretation random_spec(std::uint64_t seed, const Signature& sig);

/// Random affine level mapping built from len/natval/size measures of the
/// pattern variables plus a small constant.
LevelMapping random_levels(std::uint64_t seed, const Signature& sig);

/// Extensional interpretation listing exactly the base atoms set in `bits`.
SpecInterpretation spec_from_bitset(const std::vector<bool>& bits,
                                    const HerbrandSlice& slice,
                                    const std::string& name = "extensional");

}  // namespace lpv
