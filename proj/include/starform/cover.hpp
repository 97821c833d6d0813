#pragma once

#include <array>
#include <vector>

#include "starform/symbol.hpp"

namespace starform {

// Combinatorial good cover of T^n by products of 3 arcs per circle factor.
// No point-set data is kept: patches are arc tuples, and the geometry enters
// only through integer deck offsets s_{ab} (x_a = x_b + s_{ab} on overlaps).
class GoodCover {
 public:
  explicit GoodCover(int dim);

  int dim() const { return dim_; }
  int patch_count() const { return patches_; }

  MultiIndex patch_arcs(int p) const;

  bool pair_nonempty(int a, int b) const;
  bool triple_nonempty(int a, int b, int c) const;
  bool quad_nonempty(int a, int b, int c, int d) const;

  // Deck offset vector of a nonempty ordered overlap.
  MultiIndex offset(int a, int b) const;

  // Sorted index tuples of nonempty overlaps (distinct patches).
  const std::vector<std::array<int, 2>>& pairs() const { return pairs_; }
  const std::vector<std::array<int, 3>>& triples() const { return triples_; }
  const std::vector<std::array<int, 4>>& quads() const { return quads_; }

 private:
  int arc(int p, int axis) const;

  int dim_;
  int patches_;
  std::vector<std::array<int, 2>> pairs_;
  std::vector<std::array<int, 3>> triples_;
  std::vector<std::array<int, 4>> quads_;
};

inline GoodCover build_torus_cover(int dim) { return GoodCover(dim); }

}  // namespace starform
