#pragma once

#include "starform/bundle.hpp"
#include "starform/explog.hpp"

namespace starform {

// Deformed transition data phi_hat_{ab} = Exp(t_{ab}) per ordered overlap.
struct DeformedTransition {
  const LineBundleData* bundle = nullptr;
  std::map<std::pair<int, int>, SymbolSeries> phi_hat;

  const SymbolSeries& at(int a, int b) const { return phi_hat.at({a, b}); }
};

// Classical transitions viewed as deformed ones (Prop-4.1 situation: for
// pulled-back frames the quantum transition functions stay classical).
DeformedTransition classical_transitions(const LineBundleData& bundle, int order);

struct CocycleResidual {
  std::array<int, 3> triple;
  int lambda_order;  // first failing order
};

struct QuantumCocycleReport {
  bool pass = true;
  std::vector<CocycleResidual> failures;
};

// phi_{ab} * phi_{bc} * phi_{ca} = 1 and phi_{ab} * phi_{ba} = 1 under the
// given product, everything transported to the leading chart.
QuantumCocycleReport verify_quantum_cocycle(const DeformedTransition& dt,
                                            const StarProductSpec& spec);

// H^2 linear algebra on the nerve: expresses a 2-cocycle as a multiple of the
// reference monopole cocycle modulo coboundaries.
class CechComplex {
 public:
  explicit CechComplex(const GoodCover& cover);

  bool is_cocycle(const std::vector<Rational>& c2) const;  // delta_2 c = 0
  std::vector<Rational> coboundary(const std::vector<Rational>& c1) const;  // delta_1

  // Coordinate in the fixed H^2 basis; throws if c2 is not a cocycle or not
  // cohomologous to a multiple of the basis class.
  Rational reduce(const std::vector<Rational>& c2) const;

  const std::vector<Rational>& reference_cocycle() const { return reference_; }

 private:
  const GoodCover& cover_;
  std::map<std::array<int, 2>, int> pair_index_;
  std::map<std::array<int, 3>, int> triple_index_;
  std::vector<Rational> reference_;
};

struct CechClassResult {
  std::vector<std::array<int, 3>> triples;
  std::vector<Rational> cocycle;      // integers tau * n_{abc}
  Rational coordinate = 0;            // in the H^2 basis
  bool integral = true;
};

// Deligne relative class of (star', star) for the magnetic pair built from the
// bundle: t_{ab} = Ln(phi_hat_{ab}), t_{abc} = t_{ab} o t_{bc} o t_{ca}; every
// t_{abc} must be a constant tau * n_{abc} with integer n.
CechClassResult relative_class(const LineBundleData& bundle, const StarProductSpec& spec);

// Characteristic-class bookkeeping: the 1/(i*lambda) head plus an H^2
// coordinate per lambda-order (H^2(T*T^2) is one-dimensional).
struct CharacteristicClass {
  TauScalar head;                    // coefficient of [omega]/(i*lambda); 0 on T*T^n
  FormalSeries<TauScalar> coords{0, TauScalar()};
};

// Phi_L: adds 2*pi*i*m = tau*m to the lambda^0 coordinate.
CharacteristicClass picard_action(const CharacteristicClass& cls, const Rational& m);

}  // namespace starform
