#pragma once

#include "wps/rational.hpp"
#include "wps/wpoly.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wps {

// C_f = van(f) in P(a0,a1,a2). Squarefreeness of f is assumed, not checked.
class PlaneCurve {
 public:
  // Throws Mismatch unless f has three variables, NotHomogeneous unless f is
  // a nonzero weighted-homogeneous polynomial.
  explicit PlaneCurve(WPolynomial f);

  const WPolynomial& poly() const { return f_; }
  const Weight& weight() const { return f_.weight(); }
  std::int64_t degree() const { return d_; }

 private:
  WPolynomial f_;
  std::int64_t d_;
};

struct GeneralityClause {
  std::string name;  // "degree>=2", "degree>=a_i", "pure-power", "coprime-partner", "partner-term"
  std::optional<std::size_t> index;
  bool holds = false;
  std::string detail;
};

struct GeneralityReport {
  bool ok = false;
  std::vector<GeneralityClause> clauses;
  std::vector<GeneralityClause> violated() const;
};

// Throws NotWellFormed for a non-well-formed weight.
GeneralityReport sufficiently_general(const PlaneCurve& c);

// Throws NotSufficientlyGeneral when the report fails.
void require_sufficiently_general(const PlaneCurve& c);

struct VertexMembership {
  std::array<bool, 3> by_rule{};       // a_i does not divide d
  std::array<bool, 3> by_evaluation{};  // f vanishes at the coordinate vertex
};

VertexMembership vertex_membership(const PlaneCurve& c);

// All three partials vanish at coords. Throws NotAConePoint on the origin.
bool is_singular_at(const PlaneCurve& c, const std::vector<Scalar>& coords);

PlaneCurve straight_cover(const PlaneCurve& c);

struct EdgeCheck {
  std::size_t i = 0;
  UPolynomial restriction{Field::rationals()};
  bool squarefree = false;
};

struct EdgeReport {
  bool all_squarefree = false;
  std::vector<EdgeCheck> edges;
};

// Edge restrictions of the straight cover; DegenerateEdge if one vanishes
// identically.
EdgeReport edge_squarefree_check(const PlaneCurve& c);

// Throws InvalidDegreeWeight unless d >= 2, d >= a_i, a is well-formed and
// every a_i not dividing d has a partner j with a_i | d - a_j.
void require_degree_weight(std::int64_t d, const Weight& a);

std::int64_t branching_index(std::int64_t d, const Weight& a);

// The closed formula as an exact rational, without the integrality check.
Rational genus_value(std::int64_t d, const Weight& a);

// genus_value, or NonIntegerGenus when it is not a non-negative integer.
std::int64_t genus(std::int64_t d, const Weight& a);

std::int64_t straight_genus(std::int64_t d);

// 2 g_cover - 2 == deg (2 g_base - 2) + b
bool riemann_hurwitz_check(const Rational& g_cover, const Rational& g_base, std::int64_t deg, std::int64_t b);

struct CensusEdge {
  std::size_t i = 0;
  std::int64_t count = 0;      // distinct nonzero roots of the cover's edge restriction
  std::int64_t predicted = 0;  // d if a_i | d, else d - 1
  bool squarefree = false;
  bool agrees = false;
};

struct BranchCensus {
  std::int64_t d = 0;
  Weight weights;
  std::array<bool, 3> vertices{};
  std::vector<CensusEdge> edges;
};

BranchCensus branch_census(const PlaneCurve& c);

struct SweepRow {
  Weight a;
  std::int64_t d = 0;
  std::int64_t b = 0;
  Rational genus;
  bool integral = false;  // non-negative integer
  bool rh = false;
};

// Pairwise-coprime triples with entries <= max_entry, in lexicographic order.
std::vector<Weight> coprime_triples(std::int64_t max_entry);

// Whether (d, a) passes require_degree_weight.
bool degree_weight_admissible(std::int64_t d, const Weight& a);

// Every admissible (a, d) with a from coprime_triples and 2 <= d <= max_degree,
// sorted by (a, d) regardless of the number of worker threads.
std::vector<SweepRow> genus_sweep(std::int64_t max_entry, std::int64_t max_degree, unsigned jobs = 1);

}  // namespace wps
