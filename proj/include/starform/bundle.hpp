#pragma once

#include <map>

#include "starform/cover.hpp"
#include "starform/star.hpp"

namespace starform {

// Hermitian line bundle L_m on T^2 presented over the combinatorial cover:
// transition exponents c_{ab} (stored as expressions in the chart of the first
// index), connection potentials A_a = 2*pi*m x dy, curvature B = 2*pi*m dx^dy.
// The construction identities A_a - A_b = 2*pi dc_{ab} and dA_a = B are
// checked on every overlap at build time.
class LineBundleData {
 public:
  // Full bundle; the charge must be an integer.
  LineBundleData(Rational charge, GoodCover cover);

  // Field-only data (possibly fractional or lambda-dependent charge); carries
  // no transition structure and exists to exercise the Dirac test.
  static LineBundleData field_only(FormalSeries<Rational> charges);

  const GoodCover& cover() const { return cover_; }
  const Rational& charge() const { return charge_; }
  bool has_transitions() const { return has_transitions_; }

  // Integer branch adjustment n_{ab} added to c_{ab}; antisymmetric.
  long adjustment(int a, int b) const;
  void set_adjustment(int a, int b, long value);

  // c_{ab} = m s^x_{ab} y + n_{ab}, expressed in the a-chart.
  Symbol transition_exponent(int a, int b) const;
  // phi_{ab} = e^{2 pi i c_{ab}}: a global trig monomial.
  Symbol transition_function(int a, int b) const;
  // A_a in the a-chart.
  OneForm potential(int a) const;

  // Coefficient series of B on dx^dy; 2*pi*m is stored exactly as -i tau m.
  FormalSeries<TauScalar> curvature_coefficient(int order) const;

  // Transport of a function expressed in the b-chart to the a-chart, applying
  // first the deck offset and then the transition factor when it is a section
  // coefficient: section ? phi_{ab} * f(q - s_{ab}) : f(q - s_{ab}).
  Symbol to_chart(int a, int b, const Symbol& f, bool section = false) const;
  SymbolSeries to_chart(int a, int b, const SymbolSeries& f, bool section = false) const;

  // Star-product spec for the magnetic product computed in the a-chart.
  StarProductSpec magnetic_spec(int a, int order, const Rational& kappa) const;

 private:
  void validate() const;

  GoodCover cover_;
  Rational charge_ = 0;
  bool has_transitions_ = false;
  std::map<std::pair<int, int>, long> adjustments_;
  FormalSeries<Rational> field_charges_{0, Rational(0)};
};

inline LineBundleData monopole_bundle(const Rational& m, GoodCover cover) {
  return LineBundleData(m, std::move(cover));
}

// Classical cocycle report: n_{abc} = c_{ab} + c_{bc} + c_{ca} expressed in
// the a-chart, an integer on every nonempty triple.
struct ClassicalCocycle {
  std::vector<std::array<int, 3>> triples;
  std::vector<Rational> values;
};

ClassicalCocycle verify_classical_cocycle(const LineBundleData& bundle);

// Dirac integrality: charges per lambda-order, integral iff all are integers.
struct DiracReport {
  std::vector<Rational> charges;
  bool integral = true;
};

DiracReport dirac_check(const FormalSeries<TauScalar>& b_coefficient);
inline DiracReport dirac_check(const LineBundleData& bundle, int order) {
  return dirac_check(bundle.curvature_coefficient(order));
}

}  // namespace starform
