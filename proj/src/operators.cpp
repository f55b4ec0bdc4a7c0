#include "heis/operators.hpp"

#include <stdexcept>

namespace heis {

std::string kind_name(SymmetryKind kind) {
  switch (kind) {
    case SymmetryKind::Killing: return "killing";
    case SymmetryKind::Affine: return "affine";
    case SymmetryKind::Ricci: return "ricci";
    case SymmetryKind::Curvature: return "curvature";
    case SymmetryKind::Matter: return "matter";
  }
  return "?";
}

SymmetryKind parse_kind(std::string_view name) {
  for (auto k : kAllKinds)
    if (kind_name(k) == name) return k;
  throw std::invalid_argument(
      "unknown symmetry '" + std::string(name) +
      "' (expected killing, affine, ricci, curvature or matter)");
}

int SymTensor2Result::index(int i, int j) {
  if (i > j) std::swap(i, j);
  static constexpr int kIndex[3][3] = {{0, 1, 2}, {1, 3, 4}, {2, 4, 5}};
  return kIndex[i][j];
}

namespace {

/// Frame field with constant components.
FrameVectorField constant_field(const Array3<Rational>& c) {
  FrameVectorField out;
  for (int k = 0; k < 3; ++k) out.f[k] = Poly(c[k]);
  return out;
}

/// nabla_Y e_j = sum_m y_m Gamma^k_mj e_k.
FrameVectorField nabla_along(const Geometry& geo, const FrameVectorField& Y,
                             int j) {
  const auto& G = geo.connection.gamma;
  FrameVectorField out;
  for (int k = 0; k < 3; ++k)
    for (int m = 0; m < 3; ++m)
      if (G[m][j][k] != 0 && !Y.f[m].is_zero())
        out.f[k] += Poly(G[m][j][k]) * Y.f[m];
  return out;
}

/// R(Y, Z) W for frame fields with function coefficients.
FrameVectorField riemann_apply(const Geometry& geo, const FrameVectorField& Y,
                               const FrameVectorField& Z,
                               const FrameVectorField& W) {
  const auto& R = geo.curvature.riem;
  FrameVectorField out;
  for (int a = 0; a < 3; ++a) {
    if (Y.f[a].is_zero()) continue;
    for (int b = 0; b < 3; ++b) {
      if (Z.f[b].is_zero()) continue;
      Poly yz = Y.f[a] * Z.f[b];
      for (int c = 0; c < 3; ++c) {
        if (W.f[c].is_zero()) continue;
        Poly yzw = yz * W.f[c];
        for (int l = 0; l < 3; ++l)
          if (R[a][b][c][l] != 0) out.f[l] += Poly(R[a][b][c][l]) * yzw;
      }
    }
  }
  return out;
}

std::string label2(int i, int j) {
  return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void append_sym2(std::vector<OperatorComponent>& out,
                 const SymTensor2Result& r) {
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) out.push_back({label2(i, j), r.at(i, j)});
}

}  // namespace

FrameVectorField covariant_derivative_vf(const Geometry& geo, int i,
                                         const FrameVectorField& X) {
  const auto& G = geo.connection.gamma;
  FrameVectorField out;
  for (int k = 0; k < 3; ++k) {
    out.f[k] = frame_apply(geo.model, i, X.f[k]);
    for (int j = 0; j < 3; ++j)
      if (G[i][j][k] != 0 && !X.f[j].is_zero())
        out.f[k] += Poly(G[i][j][k]) * X.f[j];
  }
  return out;
}

FrameVectorField lie_bracket(const MetricModel& model,
                             const FrameVectorField& X,
                             const FrameVectorField& Y) {
  const auto& C = model.structure;
  FrameVectorField out;
  for (int k = 0; k < 3; ++k) {
    out.f[k] = apply_field(model, X, Y.f[k]) - apply_field(model, Y, X.f[k]);
    for (int i = 0; i < 3; ++i) {
      if (X.f[i].is_zero()) continue;
      for (int j = 0; j < 3; ++j)
        if (C[i][j][k] != 0 && !Y.f[j].is_zero())
          out.f[k] += Poly(C[i][j][k]) * X.f[i] * Y.f[j];
    }
  }
  return out;
}

SymTensor2Result killing_operator(const Geometry& geo,
                                  const FrameVectorField& X) {
  const auto& e = geo.model.signature;
  Array3<FrameVectorField> nabla;
  for (int i = 0; i < 3; ++i) nabla[i] = covariant_derivative_vf(geo, i, X);
  SymTensor2Result out;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j)
      out.comps[SymTensor2Result::index(i, j)] =
          Poly(e[j]) * nabla[i].f[j] + Poly(e[i]) * nabla[j].f[i];
  return out;
}

Conn3Result affine_operator(const Geometry& geo, const FrameVectorField& X) {
  const auto& model = geo.model;
  const auto& G = geo.connection.gamma;
  Array3<FrameVectorField> x_ei;
  for (int i = 0; i < 3; ++i)
    x_ei[i] = lie_bracket(model, X, FrameVectorField::unit(i));

  Conn3Result out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      FrameVectorField r =
          lie_bracket(model, X, constant_field(G[i][j]));
      r -= nabla_along(geo, x_ei[i], j);
      r -= covariant_derivative_vf(geo, i, x_ei[j]);
      out.comps[i][j] = r.f;
    }
  return out;
}

SymTensor2Result sym2_lie_derivative(const Geometry& geo,
                                     const RationalMatrix3& S,
                                     const FrameVectorField& X) {
  Array3<FrameVectorField> x_ei;
  for (int i = 0; i < 3; ++i)
    x_ei[i] = lie_bracket(geo.model, X, FrameVectorField::unit(i));
  SymTensor2Result out;
  for (int i = 0; i < 3; ++i)
    for (int j = i; j < 3; ++j) {
      Poly c;
      for (int k = 0; k < 3; ++k) {
        if (S[k][j] != 0) c -= Poly(S[k][j]) * x_ei[i].f[k];
        if (S[i][k] != 0) c -= Poly(S[i][k]) * x_ei[j].f[k];
      }
      out.comps[SymTensor2Result::index(i, j)] = c;
    }
  return out;
}

Curv4Result curvature_lie_derivative(const Geometry& geo,
                                     const FrameVectorField& X) {
  const auto& model = geo.model;
  const auto& R = geo.curvature.riem;
  Array3<FrameVectorField> unit, x_ei;
  for (int i = 0; i < 3; ++i) {
    unit[i] = FrameVectorField::unit(i);
    x_ei[i] = lie_bracket(model, X, unit[i]);
  }
  Curv4Result out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        Array3<Rational> rijk{R[i][j][k][0], R[i][j][k][1], R[i][j][k][2]};
        FrameVectorField r = lie_bracket(model, X, constant_field(rijk));
        r -= riemann_apply(geo, x_ei[i], unit[j], unit[k]);
        r -= riemann_apply(geo, unit[i], x_ei[j], unit[k]);
        r -= riemann_apply(geo, unit[i], unit[j], x_ei[k]);
        out.comps[i][j][k] = r.f;
      }
  return out;
}

std::vector<OperatorComponent> operator_components(const Geometry& geo,
                                                   SymmetryKind kind,
                                                   const FrameVectorField& X) {
  std::vector<OperatorComponent> out;
  switch (kind) {
    case SymmetryKind::Killing:
      append_sym2(out, killing_operator(geo, X));
      break;
    case SymmetryKind::Ricci:
      append_sym2(out, sym2_lie_derivative(geo, geo.ricci.rho, X));
      break;
    case SymmetryKind::Matter:
      append_sym2(out, sym2_lie_derivative(geo, geo.ricci.matter, X));
      break;
    case SymmetryKind::Affine: {
      auto r = affine_operator(geo, X);
      // symmetric in (i, j): the i > j half carries no extra equations
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            out.push_back({"(" + std::to_string(i + 1) + "," +
                               std::to_string(j + 1) + ";" +
                               std::to_string(k + 1) + ")",
                           r.comps[i][j][k]});
      break;
    }
    case SymmetryKind::Curvature: {
      auto r = curvature_lie_derivative(geo, X);
      // antisymmetric in (i, j)
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          for (int k = 0; k < 3; ++k)
            for (int l = 0; l < 3; ++l)
              out.push_back({"(" + std::to_string(i + 1) + "," +
                                 std::to_string(j + 1) + "," +
                                 std::to_string(k + 1) + ";" +
                                 std::to_string(l + 1) + ")",
                             r.comps[i][j][k][l]});
      break;
    }
  }
  return out;
}

bool is_symmetry(const Geometry& geo, SymmetryKind kind,
                 const FrameVectorField& X) {
  for (const auto& c : operator_components(geo, kind, X))
    if (!c.value.is_zero()) return false;
  return true;
}

}  // namespace heis
