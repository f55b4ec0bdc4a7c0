#include "heis/models.hpp"

#include <algorithm>
#include <stdexcept>

namespace heis {

std::string model_name(ModelId id) {
  return "g" + std::to_string(static_cast<int>(id));
}

ModelId parse_model(std::string_view name) {
  if (name == "g0") return ModelId::G0;
  if (name == "g1") return ModelId::G1;
  if (name == "g2") return ModelId::G2;
  if (name == "g3") return ModelId::G3;
  throw std::invalid_argument("unknown metric '" + std::string(name) +
                              "' (expected g0, g1, g2 or g3)");
}

FrameVectorField FrameVectorField::unit(int i) {
  FrameVectorField X;
  X.f[i] = Poly(1);
  return X;
}

bool FrameVectorField::is_zero() const {
  return f[0].is_zero() && f[1].is_zero() && f[2].is_zero();
}

FrameVectorField& FrameVectorField::operator+=(const FrameVectorField& o) {
  for (int k = 0; k < 3; ++k) f[k] += o.f[k];
  return *this;
}

FrameVectorField& FrameVectorField::operator-=(const FrameVectorField& o) {
  for (int k = 0; k < 3; ++k) f[k] -= o.f[k];
  return *this;
}

FrameVectorField FrameVectorField::scaled(const Rational& c) const {
  FrameVectorField out = *this;
  for (auto& p : out.f) p.scale(c);
  return out;
}

int FrameVectorField::degree() const {
  return std::max({f[0].degree(), f[1].degree(), f[2].degree()});
}

namespace {

void set_bracket(Rational3& c, int i, int j, int k, const Rational& value) {
  c[i][j][k] = value;
  c[j][i][k] = -value;
}

}  // namespace

MetricModel build_model(ModelId id, std::optional<Rational> lambda) {
  MetricModel m;
  m.id = id;
  if (id == ModelId::G3) {
    if (lambda) throw std::invalid_argument("g3 has no lambda parameter");
  } else {
    if (!lambda)
      throw std::invalid_argument(model_name(id) + " requires lambda");
    if (*lambda == 0)
      throw std::invalid_argument("lambda must be nonzero");
    if (id == ModelId::G0 && *lambda < 0)
      throw std::invalid_argument("g0 requires lambda > 0");
    m.lambda = lambda;
  }
  for (auto& a : m.structure)
    for (auto& b : a)
      for (auto& c : b) c = 0;

  const Poly one(1);
  const Poly kX = Poly::var(Var::X);
  switch (id) {
    case ModelId::G0:
    case ModelId::G2: {
      const Rational& l = *lambda;
      // e1 = dy - x dz, e2 = l dx, e3 = dz
      m.frame = {{{Poly(), one, -kX}, {Poly(l), Poly(), Poly()},
                  {Poly(), Poly(), one}}};
      // dx = e2 / l, dy = e1 + x e3, dz = e3
      m.inverse_frame = {{{Poly(), Poly(Rational(1 / l)), Poly()},
                          {one, Poly(), kX},
                          {Poly(), Poly(), one}}};
      m.signature = id == ModelId::G0 ? Array3<int>{1, 1, 1}
                                      : Array3<int>{1, 1, -1};
      set_bracket(m.structure, 0, 1, 2, l);
      break;
    }
    case ModelId::G1: {
      const Rational& l = *lambda;
      // e1 = dz, e2 = dy - x dz, e3 = l dx
      m.frame = {{{Poly(), Poly(), one}, {Poly(), one, -kX},
                  {Poly(l), Poly(), Poly()}}};
      // dx = e3 / l, dy = x e1 + e2, dz = e1
      m.inverse_frame = {{{Poly(), Poly(), Poly(Rational(1 / l))},
                          {kX, one, Poly()},
                          {one, Poly(), Poly()}}};
      m.signature = {1, 1, -1};
      set_bracket(m.structure, 1, 2, 0, l);
      break;
    }
    case ModelId::G3: {
      // e1 = dx, e2 = dy + (1 - x) dz, e3 = dy - x dz
      m.frame = {{{one, Poly(), Poly()}, {Poly(), one, one - kX},
                  {Poly(), one, -kX}}};
      // dx = e1, dy = x e2 + (1 - x) e3, dz = e2 - e3
      m.inverse_frame = {{{one, Poly(), Poly()},
                          {Poly(), kX, one - kX},
                          {Poly(), one, Poly(-1)}}};
      m.signature = {1, 1, -1};
      // [e2, e1] = [e3, e1] = e2 - e3
      set_bracket(m.structure, 1, 0, 1, 1);
      set_bracket(m.structure, 1, 0, 2, -1);
      set_bracket(m.structure, 2, 0, 1, 1);
      set_bracket(m.structure, 2, 0, 2, -1);
      break;
    }
  }
  return m;
}

Poly frame_apply(const MetricModel& model, int i, const Poly& p) {
  Poly out;
  for (Var v : kAllVars) {
    const Poly& coeff = model.frame[i][static_cast<int>(v)];
    if (coeff.is_zero()) continue;
    out += coeff * p.derivative(v);
  }
  return out;
}

Poly apply_field(const MetricModel& model, const FrameVectorField& X,
                 const Poly& p) {
  Poly out;
  for (int i = 0; i < 3; ++i) {
    if (X.f[i].is_zero()) continue;
    out += X.f[i] * frame_apply(model, i, p);
  }
  return out;
}

CoordVectorField frame_to_coord(const MetricModel& model,
                                const FrameVectorField& X) {
  CoordVectorField out;
  for (int v = 0; v < 3; ++v)
    for (int i = 0; i < 3; ++i)
      if (!model.frame[i][v].is_zero()) out.v[v] += X.f[i] * model.frame[i][v];
  return out;
}

FrameVectorField coord_to_frame(const MetricModel& model,
                                const CoordVectorField& c) {
  FrameVectorField out;
  for (int k = 0; k < 3; ++k)
    for (int v = 0; v < 3; ++v)
      if (!model.inverse_frame[v][k].is_zero())
        out.f[k] += c.v[v] * model.inverse_frame[v][k];
  return out;
}

Array3<Poly> recomputed_bracket(const MetricModel& model, int i, int j) {
  CoordVectorField coord;
  for (int v = 0; v < 3; ++v)
    coord.v[v] = frame_apply(model, i, model.frame[j][v]) -
                 frame_apply(model, j, model.frame[i][v]);
  return coord_to_frame(model, coord).f;
}

bool verify_structure(const MetricModel& model) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto b = recomputed_bracket(model, i, j);
      for (int k = 0; k < 3; ++k)
        if (b[k] != Poly(model.structure[i][j][k])) return false;
    }
  return true;
}

}  // namespace heis
