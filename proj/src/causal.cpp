#include "heis/causal.hpp"

#include <stdexcept>

namespace heis {

std::string causal_name(CausalClass c) {
  switch (c) {
    case CausalClass::Spacelike: return "spacelike";
    case CausalClass::Timelike: return "timelike";
    case CausalClass::Null: return "null";
    case CausalClass::Zero: return "zero";
    case CausalClass::SignChanging: return "sign-changing";
    case CausalClass::InconclusiveOnGrid: return "inconclusive-on-grid";
  }
  return "?";
}

Poly norm_squared(const MetricModel& model, const FrameVectorField& X) {
  if (model.riemannian())
    throw std::invalid_argument(
        "g0 is Riemannian: every nonzero field is spacelike");
  Poly out;
  for (int i = 0; i < 3; ++i) {
    Poly sq = X.f[i] * X.f[i];
    if (model.signature[i] < 0) out -= sq;
    else out += sq;
  }
  return out;
}

int certified_sign(const Poly& p) {
  const int s = sign(p.constant_term());
  if (s == 0) return 0;
  for (const auto& [m, c] : p.terms())
    if (sign(c) != s || m.exps[0] % 2 || m.exps[1] % 2 || m.exps[2] % 2)
      return 0;
  return s;
}

std::vector<Point3> default_grid() {
  const Rational v[] = {-3, Rational(-3, 2), 0, Rational(3, 2), 3};
  std::vector<Point3> g;
  for (const auto& a : v)
    for (const auto& b : v)
      for (const auto& c : v) g.push_back({a, b, c});
  return g;
}

CausalReport classify(const MetricModel& model, const FrameVectorField& X,
                      const std::vector<Point3>& grid) {
  if (grid.empty()) throw std::invalid_argument("empty sample grid");
  CausalReport rep{norm_squared(model, X), CausalClass::Zero, {}};
  if (rep.norm_squared.is_zero()) {
    rep.classification = X.is_zero() ? CausalClass::Zero : CausalClass::Null;
    return rep;
  }
  const Witness* pos = nullptr;
  const Witness* neg = nullptr;
  std::vector<Witness> samples, zeros;
  samples.reserve(grid.size());
  for (const auto& p : grid) {
    samples.push_back({p, sign(rep.norm_squared.evaluate(p))});
    if (samples.back().sign == 0) zeros.push_back(samples.back());
  }
  for (const auto& w : samples) {
    if (w.sign > 0 && !pos) pos = &w;
    if (w.sign < 0 && !neg) neg = &w;
  }
  if (pos) rep.witnesses.push_back(*pos);
  if (neg) rep.witnesses.push_back(*neg);
  if (pos && neg) {
    rep.classification = CausalClass::SignChanging;
  } else if (zeros.empty()) {
    rep.classification = pos ? CausalClass::Spacelike : CausalClass::Timelike;
    rep.certified = certified_sign(rep.norm_squared) == (pos ? 1 : -1);
  } else {
    rep.classification = CausalClass::InconclusiveOnGrid;
    rep.witnesses.insert(rep.witnesses.end(), zeros.begin(), zeros.end());
  }
  return rep;
}

std::vector<std::vector<Rational>> default_coefficient_grid(int n) {
  std::vector<std::vector<Rational>> out;
  std::vector<int> t(n, -2);
  while (true) {
    bool zero = true;
    for (int v : t) zero = zero && v == 0;
    if (!zero) {
      std::vector<Rational> r;
      for (int v : t) r.emplace_back(v);
      out.push_back(std::move(r));
    }
    int k = n - 1;
    while (k >= 0 && t[k] == 2) t[k--] = -2;
    if (k < 0) break;
    ++t[k];
  }
  return out;
}

int ScanSummary::count(CausalClass c) const {
  auto it = counts.find(c);
  return it == counts.end() ? 0 : it->second;
}

ScanSummary scan_combinations(const MetricModel& model,
                              const std::vector<FrameVectorField>& basis,
                              const std::vector<std::vector<Rational>>& coeffs,
                              const std::vector<Point3>& grid) {
  ScanSummary s;
  for (const auto& c : coeffs) {
    if (c.size() != basis.size())
      throw std::invalid_argument("coefficient tuple has wrong length");
    FrameVectorField X;
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c[k] != 0) X += basis[k].scaled(c[k]);
    ++s.counts[classify(model, X, grid).classification];
    ++s.total;
  }
  return s;
}

}  // namespace heis
