#pragma once

#include "starform/bundle.hpp"
#include "starform/matrix_symbol.hpp"
#include "starform/star.hpp"

namespace starform {

inline void require_weyl(const StarProductSpec& spec, const char* who) {
  if (spec.kappa != Rational(1, 2))
    throw std::invalid_argument(std::string(who) + ": requires the Weyl spec (kappa = 1/2)");
}

// Quantum trivialization of classical local coefficients: s_hat = N^{-1}(s).
inline SymbolSeries quantum_coefficients(const StarProductSpec& spec, const SymbolSeries& s) {
  return apply_N_kappa_inv(spec.without_magnetic(), s);
}

// Deformed Hermitian metric on local coefficient vectors:
//   h(s, s') = sum_i (N^{-1} s_i)~conj *_W N^{-1} s'_i.
SymbolSeries metric_eval(const StarProductSpec& spec, const std::vector<SymbolSeries>& s,
                         const std::vector<SymbolSeries>& s_prime);

inline SymbolSeries metric_eval(const StarProductSpec& spec, const SymbolSeries& s,
                                const SymbolSeries& s_prime) {
  return metric_eval(spec, std::vector{s}, std::vector{s_prime});
}

struct OverlapResidual {
  std::array<int, 2> pair;
  int lambda_order;
};

struct UnitarityReport {
  bool pass = true;
  std::vector<OverlapResidual> failures;
};

// phi*_{ab} *_W phi_{ab} = 1 on every overlap.
UnitarityReport unitary_cocycle_check(const LineBundleData& bundle, const StarProductSpec& spec);

// Order-by-order Hermitian square root: U = id + sum lambda^r U_r with
// U* * U = H and every U_r Hermitian (the anti-Hermitian gauge is set to 0).
MatrixSeries hermitian_sqrt(const StarProductSpec& spec, const MatrixSeries& h);

// V = U^{-1}; the transformed frame metric V* * H * V is the identity.
MatrixSeries orthonormalize_frame(const StarProductSpec& spec, const MatrixSeries& h);

// Theta_{s,t} z = s . h(t, z) with Theta_{s,t} = S^{-1}(s_hat *_W t_hat*):
// both routes evaluated independently; returns the residual series.
SymbolSeries theta_compatibility_residual(const StarProductSpec& weyl_spec,
                                          const LineBundleData& bundle, int patch,
                                          const SymbolSeries& s, const SymbolSeries& t,
                                          const SymbolSeries& z);

// Positivity of h(s, s) for wave-coefficient sections: lowest nonvanishing
// lambda-coefficient integrated over the torus, evaluated at tau = 2 pi i.
double metric_positivity_value(const StarProductSpec& spec, const std::vector<SymbolSeries>& s);

}  // namespace starform
