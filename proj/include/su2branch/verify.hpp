#pragma once

#include <optional>
#include <string>
#include <vector>

#include "su2branch/coxeter.hpp"
#include "su2branch/rootsys.hpp"

namespace su2b {

inline constexpr const char* kNodeConvention = "su2branch-nodes-v1";

/// (a, b, h, g) from the classical table's closed forms for the family.
struct TableRow {
  std::string group;  // F, e.g. "Z_4", "Delta_3", "Alt_5"
  int a = 0, b = 0, h = 0, g = 0;
};
TableRow table_closed_form(const DiagramType& dtype);

/// Reference E8 z-polynomials keyed by (mark, distance to alpha_0), as
/// (exponent, coefficient) terms.
struct GoldenPolynomial {
  int mark;
  int distance;
  std::vector<std::pair<int, long long>> terms;
};
const std::vector<GoldenPolynomial>& e8_golden_polynomials();

struct VerifyOptions {
  int series_order = 200;     // coxeter vs recursion, sum rule, parity
  int character_order = 60;   // vs characters, Molien
};

struct TypeReport {
  std::string type;
  std::vector<Check> checks;
  bool passed() const;
};

/// Every structural and cross-oracle check for one type. Construction
/// failures are recorded as failed checks rather than thrown.
TypeReport verify_type(const DiagramType& dtype, const VerifyOptions& opts = {});

/// Reports in input order; types are checked in parallel when parallel is set.
std::vector<TypeReport> verify_types(const std::vector<DiagramType>& types, const VerifyOptions& opts = {},
                                     bool parallel = true);

std::string render_report(const std::vector<TypeReport>& reports);

}  // namespace su2b
