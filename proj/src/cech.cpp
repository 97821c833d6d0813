#include "starform/cech.hpp"

namespace starform {

namespace {

// Exact Gaussian elimination; returns any solution of M x = rhs or nullopt.
std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> m,
                                           std::vector<Rational> rhs) {
  size_t rows = m.size();
  size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col(rows, -1);
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[pr], m[r]);
    std::swap(rhs[pr], rhs[r]);
    Rational inv = Rational(1) / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      rhs[i] -= f * rhs[r];
    }
    pivot_col[r] = static_cast<int>(c);
    ++r;
  }
  for (size_t i = r; i < rows; ++i)
    if (rhs[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols, Rational(0));
  for (size_t i = 0; i < r; ++i) x[pivot_col[i]] = rhs[i];
  return x;
}

Rational constant_tau_integer(const Symbol& s, const std::array<int, 3>& triple) {
  TermKey constant{MultiIndex(s.dim(), 0), MultiIndex(s.dim(), 0), MultiIndex(s.dim(), 0)};
  TauScalar value = s.coeff(constant);
  Symbol rest = s - Symbol::constant(value, s.dim(), Globality::chart);
  std::string where = " on triple (" + std::to_string(triple[0]) + "," +
                      std::to_string(triple[1]) + "," + std::to_string(triple[2]) + ")";
  if (!rest.is_zero()) throw std::logic_error("relative class: t_abc is not constant" + where);
  if (value.is_zero()) return 0;
  if (value.degree() != 1 || !value.coeff(0).is_zero() || value.coeff(1).im != 0)
    throw std::logic_error("relative class: t_abc is not a tau multiple" + where);
  Rational n = value.coeff(1).re;
  if (!is_integer(n)) throw std::logic_error("relative class: t_abc is not 2 pi i integral" + where);
  return n;
}

}  // namespace

DeformedTransition classical_transitions(const LineBundleData& bundle, int order) {
  DeformedTransition dt;
  dt.bundle = &bundle;
  for (const auto& [a, b] : bundle.cover().pairs()) {
    dt.phi_hat.emplace(std::pair{a, b},
                       symbol_series(order, bundle.transition_function(a, b)));
    dt.phi_hat.emplace(std::pair{b, a},
                       symbol_series(order, bundle.transition_function(b, a)));
  }
  return dt;
}

QuantumCocycleReport verify_quantum_cocycle(const DeformedTransition& dt,
                                            const StarProductSpec& spec) {
  const LineBundleData& bundle = *dt.bundle;
  QuantumCocycleReport report;
  auto record = [&](const SymbolSeries& prod, std::array<int, 3> triple) {
    SymbolSeries one = symbol_series(prod.order(), Symbol::one(spec.ctx.dim));
    SymbolSeries residual = prod - one;
    if (!residual.is_zero()) {
      report.pass = false;
      report.failures.push_back({triple, residual.lowest_order()});
    }
  };
  for (const auto& [a, b] : bundle.cover().pairs()) {
    SymbolSeries prod = star(spec, dt.at(a, b), bundle.to_chart(a, b, dt.at(b, a)));
    record(prod, {a, b, b});
  }
  for (const auto& [a, b, c] : bundle.cover().triples()) {
    SymbolSeries prod = star(
        spec, star(spec, dt.at(a, b), bundle.to_chart(a, b, dt.at(b, c))),
        bundle.to_chart(a, c, dt.at(c, a)));
    record(prod, {a, b, c});
  }
  return report;
}

CechComplex::CechComplex(const GoodCover& cover) : cover_(cover) {
  int pi = 0;
  for (const auto& p : cover.pairs()) pair_index_[p] = pi++;
  int ti = 0;
  for (const auto& t : cover.triples()) triple_index_[t] = ti++;
  if (!cover.triples().empty()) {
    // Reference class: the charge-1 monopole cocycle.
    LineBundleData unit(1, cover);
    ClassicalCocycle c = verify_classical_cocycle(unit);
    reference_ = c.values;
    // H^2 basis sanity: the reference must not be a coboundary.
    std::vector<std::vector<Rational>> m(reference_.size(),
                                         std::vector<Rational>(pair_index_.size(), Rational(0)));
    for (const auto& [t, row] : triple_index_) {
      auto [a, b, c3] = t;
      m[row][pair_index_.at({b, c3})] += 1;
      m[row][pair_index_.at({a, c3})] -= 1;
      m[row][pair_index_.at({a, b})] += 1;
    }
    if (solve(m, reference_))
      throw std::logic_error("CechComplex: reference cocycle is a coboundary");
  }
}

std::vector<Rational> CechComplex::coboundary(const std::vector<Rational>& c1) const {
  std::vector<Rational> out(cover_.triples().size(), Rational(0));
  for (const auto& [t, row] : triple_index_) {
    auto [a, b, c] = t;
    out[row] = c1[pair_index_.at({b, c})] - c1[pair_index_.at({a, c})] + c1[pair_index_.at({a, b})];
  }
  return out;
}

bool CechComplex::is_cocycle(const std::vector<Rational>& c2) const {
  for (const auto& [a, b, c, d] : cover_.quads()) {
    Rational v = c2[triple_index_.at({b, c, d})] - c2[triple_index_.at({a, c, d})] +
                 c2[triple_index_.at({a, b, d})] - c2[triple_index_.at({a, b, c})];
    if (v != 0) return false;
  }
  return true;
}

Rational CechComplex::reduce(const std::vector<Rational>& c2) const {
  if (cover_.triples().empty()) return 0;
  if (c2.size() != cover_.triples().size())
    throw std::invalid_argument("cech_class_reduce: cochain size mismatch");
  if (!is_cocycle(c2)) throw std::domain_error("cech_class_reduce: not a cocycle");
  // Solve c2 = a * reference + delta_1(b).
  size_t pairs = pair_index_.size();
  std::vector<std::vector<Rational>> m(c2.size(), std::vector<Rational>(pairs + 1, Rational(0)));
  for (const auto& [t, row] : triple_index_) {
    auto [a, b, c] = t;
    m[row][pair_index_.at({b, c})] += 1;
    m[row][pair_index_.at({a, c})] -= 1;
    m[row][pair_index_.at({a, b})] += 1;
    m[row][pairs] = reference_[row];
  }
  auto x = solve(std::move(m), c2);
  if (!x) throw std::domain_error("cech_class_reduce: cocycle not in the span of the basis");
  return (*x)[pairs];
}

CechClassResult relative_class(const LineBundleData& bundle, const StarProductSpec& spec) {
  if (spec.magnetic)
    throw std::invalid_argument("relative_class: pass the base kappa product; the magnetic side is built from the bundle");
  if (spec.ctx.order < 2)
    throw std::invalid_argument("relative_class: order N >= 2 required");
  int order = spec.ctx.order;
  DeformedTransition dt = classical_transitions(bundle, order);
  // Star logarithms with the branch fixed by the stored integer adjustments.
  std::map<std::pair<int, int>, SymbolSeries> logs;
  for (const auto& [a, b] : bundle.cover().pairs()) {
    logs.emplace(std::pair{a, b}, star_log(spec, dt.at(a, b), bundle.adjustment(a, b)));
    logs.emplace(std::pair{b, a}, star_log(spec, dt.at(b, a), bundle.adjustment(b, a)));
  }
  ClassicalCocycle classical = verify_classical_cocycle(bundle);
  CechClassResult result;
  CechComplex complex(bundle.cover());
  size_t idx = 0;
  for (const auto& [a, b, c] : bundle.cover().triples()) {
    SymbolSeries t =
        bch_compose(spec, logs.at({a, b}),
                    bch_compose(spec, bundle.to_chart(a, b, logs.at({b, c})),
                                bundle.to_chart(a, c, logs.at({c, a}))));
    Rational n = 0;
    for (int r = 0; r <= t.order(); ++r) {
      Rational nr = constant_tau_integer(t[r], {a, b, c});
      if (r == 0)
        n = nr;
      else if (nr != 0)
        throw std::logic_error("relative class: t_abc depends on lambda");
    }
    if (n != classical.values[idx])
      throw std::logic_error("relative class: quantum cocycle differs from the Chern cocycle");
    result.triples.push_back({a, b, c});
    result.cocycle.push_back(n);
    ++idx;
  }
  result.coordinate = complex.reduce(result.cocycle);
  result.integral = is_integer(result.coordinate);
  return result;
}

CharacteristicClass picard_action(const CharacteristicClass& cls, const Rational& m) {
  CharacteristicClass out = cls;
  out.coords[0] += TauScalar::tau(1, GaussianRational(m));
  return out;
}

}  // namespace starform
