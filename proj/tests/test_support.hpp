#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "oracle.hpp"
#include "tusi/polynomial.hpp"

namespace test {

inline constexpr std::uint64_t kSeed = 20240517;

inline std::vector<double> coeffs_of(const tusi::Polynomial& p) {
  return {p.coeffs().begin(), p.coeffs().end()};
}

inline oracle::OracleResult oracle_of(const tusi::Polynomial& p) {
  return oracle::oracle_roots(coeffs_of(p));
}

inline double uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

// Log-uniform magnitude in [lo, hi], lo > 0.
inline double log_uniform(std::mt19937_64& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

}  // namespace test
