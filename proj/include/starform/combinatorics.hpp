#pragma once

#include <vector>

#include "starform/symbol.hpp"

namespace starform {

inline Rational factorial(int n) {
  Rational r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Rational multi_factorial(const MultiIndex& m) {
  Rational r = 1;
  for (int x : m) r *= factorial(x);
  return r;
}

// i^c as a GaussianRational.
inline GaussianRational i_pow(int c) {
  switch (((c % 4) + 4) % 4) {
    case 0: return GaussianRational(1);
    case 1: return GaussianRational::i();
    case 2: return GaussianRational(-1);
    default: return -GaussianRational::i();
  }
}

inline GaussianRational gr_pow(GaussianRational z, int c) {
  GaussianRational r(1);
  for (int k = 0; k < c; ++k) r *= z;
  return r;
}

// All multi-indices of the given weight in `dim` slots, lexicographic.
inline std::vector<MultiIndex> multi_indices(int dim, int weight) {
  std::vector<MultiIndex> out;
  MultiIndex cur(dim, 0);
  auto rec = [&](auto&& self, int slot, int left) -> void {
    if (slot == dim - 1) {
      cur[slot] = left;
      out.push_back(cur);
      return;
    }
    for (int k = left; k >= 0; --k) {
      cur[slot] = k;
      self(self, slot + 1, left - k);
    }
  };
  rec(rec, 0, weight);
  return out;
}

}  // namespace starform
