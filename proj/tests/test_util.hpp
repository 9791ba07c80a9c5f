#pragma once

#include <random>

#include "tilt/chern.hpp"

namespace ttest {

using tilt::ChernVector;
using tilt::Rational;

inline Rational rand_rat(std::mt19937& rng, int num_abs = 12, int den_max = 8) {
  std::uniform_int_distribution<int> num(-num_abs, num_abs), den(1, den_max);
  return Rational(num(rng), den(rng));
}

inline Rational rand_rat_pos(std::mt19937& rng, int num_max = 12, int den_max = 8) {
  std::uniform_int_distribution<int> num(1, num_max), den(1, den_max);
  return Rational(num(rng), den(rng));
}

inline ChernVector rand_chern(std::mt19937& rng) {
  return {rand_rat(rng), rand_rat(rng), rand_rat(rng), rand_rat(rng)};
}

}  // namespace ttest
