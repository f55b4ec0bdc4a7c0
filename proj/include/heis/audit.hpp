#pragma once

#include "heis/algebra.hpp"
#include "heis/causal.hpp"
#include "heis/reference.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace heis {

enum class Verdict { Pass, Fail, EvidenceOnly };

std::string verdict_name(Verdict v);  // "PASS", "FAIL", "EVIDENCE-ONLY"

struct AuditRecord {
  int criterion;     // 1..13
  std::string claim;  // stable id, e.g. "killing-dimension/g1/lambda=1/2"
  std::string expected;
  std::string computed;
  Verdict verdict;
};

inline constexpr int kCriterionCount = 13;

/// Short title of criterion n (1-based).
std::string criterion_title(int n);

/// One printed equation of an affine system compared with the operator.
struct PrintedEquationCheck {
  int index;  // 1-based position in the printed system
  /// Vanishes on every computed affine field.
  bool holds_on_solutions = false;
  /// Label of an operator component equal to the equation up to a nonzero
  /// factor on the whole monomial basis, if there is one.
  std::optional<std::string> component;
  Rational factor;
};

struct PrintedSystemCheck {
  ModelId model;
  Rational lambda;
  int degree = 0;
  std::vector<PrintedEquationCheck> equations;
  int printed_kernel_dimension = 0;
  int computed_kernel_dimension = 0;
  bool same_solution_space = false;
  /// Indices of equations that fail to hold or match no component.
  std::vector<int> discrepancies() const;
};

/// Compares the printed affine system of a model with the affine operator
/// on the degree-`degree` monomial basis and on the kernels at that degree.
PrintedSystemCheck compare_printed_affine_system(const Geometry& geo,
                                                 int degree);

/// Result of comparing one printed L_X rho / L_X T display.
struct DisplayCheck {
  reference::ComponentDisplay display;
  bool matches = false;
  /// First monomial basis field (as text) on which the two differ.
  std::string counterexample;
};

DisplayCheck check_display(const Geometry& geo,
                           const reference::ComponentDisplay& display,
                           int degree);

struct AuditOptions {
  std::vector<Rational> lambdas{Rational(1), Rational(2), Rational(1, 2)};
  int max_degree = 6;
  int display_degree = 6;
  bool parallel = true;
};

struct AuditReport {
  std::vector<Rational> lambdas;
  std::vector<AuditRecord> records;
  std::vector<PrintedSystemCheck> affine_systems;

  /// FAIL if any record fails, EVIDENCE-ONLY if every record is evidence,
  /// otherwise PASS.
  Verdict criterion_verdict(int n) const;
  bool any_fail() const;
};

AuditReport run_audit(const AuditOptions& options = {});

}  // namespace heis
