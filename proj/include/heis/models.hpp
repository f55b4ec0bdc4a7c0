#pragma once

#include "heis/poly.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace heis {

enum class ModelId { G0 = 0, G1 = 1, G2 = 2, G3 = 3 };

inline constexpr std::array<ModelId, 4> kAllModels{ModelId::G0, ModelId::G1,
                                                   ModelId::G2, ModelId::G3};

std::string model_name(ModelId id);  // "g0".."g3"
ModelId parse_model(std::string_view name);

using PolyMatrix3 = std::array<std::array<Poly, 3>, 3>;
template <typename T>
using Array3 = std::array<T, 3>;
using Rational3 = Array3<Array3<Array3<Rational>>>;

/// Vector field as coefficients against d/dx, d/dy, d/dz.
struct CoordVectorField {
  Array3<Poly> v;
  bool operator==(const CoordVectorField&) const = default;
};

/// Vector field as coefficients f1, f2, f3 against the model's frame.
struct FrameVectorField {
  Array3<Poly> f;

  static FrameVectorField unit(int i);
  bool is_zero() const;
  FrameVectorField& operator+=(const FrameVectorField& o);
  FrameVectorField& operator-=(const FrameVectorField& o);
  friend FrameVectorField operator+(FrameVectorField a,
                                    const FrameVectorField& b) {
    return a += b;
  }
  friend FrameVectorField operator-(FrameVectorField a,
                                    const FrameVectorField& b) {
    return a -= b;
  }
  FrameVectorField scaled(const Rational& c) const;
  int degree() const;
  bool operator==(const FrameVectorField&) const = default;
};

/// One left-invariant metric on the Heisenberg group together with its
/// orthonormal frame. Immutable once built.
///
/// Indices are 0-based in code; e_1..e_3 in text map to 0..2.
struct MetricModel {
  ModelId id;
  std::optional<Rational> lambda;  // absent for G3
  PolyMatrix3 frame;               // frame[i][v]: d/dv coefficient of e_i
  PolyMatrix3 inverse_frame;       // inverse_frame[v][k]: e_k coefficient of d/dv
  Array3<int> signature;           // epsilon_i = g(e_i, e_i)
  Rational3 structure;             // structure[i][j][k] = C^k_ij

  bool riemannian() const { return id == ModelId::G0; }
};

/// Builds one of the four models. lambda must be > 0 for G0, nonzero for
/// G1/G2 and absent for G3; violations throw std::invalid_argument.
MetricModel build_model(ModelId id, std::optional<Rational> lambda);

/// e_i(p) = sum_v frame[i][v] * dp/dv.
Poly frame_apply(const MetricModel& model, int i, const Poly& p);

/// X(p) for X = sum f_i e_i.
Poly apply_field(const MetricModel& model, const FrameVectorField& X,
                 const Poly& p);

/// [e_i, e_j] recomputed from the frame as differential operators,
/// expressed in frame components.
Array3<Poly> recomputed_bracket(const MetricModel& model, int i, int j);

/// True iff every recomputed frame bracket equals C^k_ij e_k exactly.
bool verify_structure(const MetricModel& model);

CoordVectorField frame_to_coord(const MetricModel& model,
                                const FrameVectorField& X);
FrameVectorField coord_to_frame(const MetricModel& model,
                                const CoordVectorField& v);

}  // namespace heis
