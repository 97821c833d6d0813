#include "starform/cover.hpp"

#include <set>
#include <stdexcept>

namespace starform {

namespace {

constexpr int kArcs = 3;

// Deck offset between two arcs of the 3-arc circle cover: the (2,0) overlap
// wraps through the basepoint.
int arc_offset(int a, int b) {
  if (a == 2 && b == 0) return 1;
  if (a == 0 && b == 2) return -1;
  return 0;
}

bool arcs_nonempty(std::set<int> distinct) { return distinct.size() <= 2; }

}  // namespace

GoodCover::GoodCover(int dim) : dim_(dim) {
  if (dim != 1 && dim != 2) throw std::invalid_argument("GoodCover: only T^1 and T^2 are built");
  patches_ = 1;
  for (int i = 0; i < dim; ++i) patches_ *= kArcs;
  for (int a = 0; a < patches_; ++a)
    for (int b = a + 1; b < patches_; ++b)
      if (pair_nonempty(a, b)) pairs_.push_back({a, b});
  for (int a = 0; a < patches_; ++a)
    for (int b = a + 1; b < patches_; ++b)
      for (int c = b + 1; c < patches_; ++c)
        if (triple_nonempty(a, b, c)) triples_.push_back({a, b, c});
  for (int a = 0; a < patches_; ++a)
    for (int b = a + 1; b < patches_; ++b)
      for (int c = b + 1; c < patches_; ++c)
        for (int d = c + 1; d < patches_; ++d)
          if (quad_nonempty(a, b, c, d)) quads_.push_back({a, b, c, d});
}

int GoodCover::arc(int p, int axis) const {
  for (int i = 0; i < axis; ++i) p /= kArcs;
  return p % kArcs;
}

MultiIndex GoodCover::patch_arcs(int p) const {
  MultiIndex arcs(dim_);
  for (int i = 0; i < dim_; ++i) arcs[i] = arc(p, i);
  return arcs;
}

bool GoodCover::pair_nonempty(int a, int b) const {
  // Any two of the three arcs intersect, so all patch pairs overlap.
  return a != b;
}

bool GoodCover::triple_nonempty(int a, int b, int c) const {
  if (a == b || b == c || a == c) return false;
  for (int i = 0; i < dim_; ++i)
    if (!arcs_nonempty({arc(a, i), arc(b, i), arc(c, i)})) return false;
  return true;
}

bool GoodCover::quad_nonempty(int a, int b, int c, int d) const {
  std::set<int> ids{a, b, c, d};
  if (ids.size() != 4) return false;
  for (int i = 0; i < dim_; ++i)
    if (!arcs_nonempty({arc(a, i), arc(b, i), arc(c, i), arc(d, i)})) return false;
  return true;
}

MultiIndex GoodCover::offset(int a, int b) const {
  if (!pair_nonempty(a, b) && a != b) throw std::invalid_argument("GoodCover: empty overlap");
  MultiIndex s(dim_);
  for (int i = 0; i < dim_; ++i) s[i] = arc_offset(arc(a, i), arc(b, i));
  return s;
}

}  // namespace starform
