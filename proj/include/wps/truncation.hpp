#pragma once

#include "wps/weights.hpp"
#include "wps/wpoly.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace wps {

// A quotient k_a[generators] / (relations).
struct GradedPresentation {
  Weight weight;
  std::vector<std::string> generator_names;
  std::vector<WPolynomial> relations;
  std::vector<std::int64_t> relation_degrees;
};

// All exponent vectors of weighted degree d, in canonical term order.
std::vector<Monomial> graded_piece_basis(const Weight& a, std::int64_t d);

// Smallest bound accepted by veronese_generators: the degree lcm(a_i, d) of
// the largest pure-power generator.
std::int64_t minimal_veronese_bound(const Weight& a, std::int64_t d);
std::int64_t default_veronese_bound(const Weight& a, std::int64_t d);

// Minimal generators of the monoid {e : sum a_i e_i = 0 mod d}, among
// monomials of degree <= degree_bound. Complete whenever
// degree_bound >= d * max(a); below that only up to the bound.
std::vector<Monomial> veronese_generators(const Weight& a, std::int64_t d, std::int64_t degree_bound);
std::vector<Monomial> veronese_generators(const Weight& a, std::int64_t d);

Weight regrade(const Weight& a, std::int64_t d, ReductionCase kind, std::optional<std::size_t> spared);

struct TransformedIdeal {
  WPolynomial generator;
  std::string tag;
  std::int64_t degree = 0;
};

// Image of the principal ideal (f) under one reduction step. The result is
// graded by regrade(a, d, kind, spared).
TransformedIdeal transform_principal_ideal(const WPolynomial& f, std::int64_t d, ReductionCase kind,
                                           std::optional<std::size_t> spared);

struct StraightenResult {
  GradedPresentation presentation;
  WellFormTrace trace;
};

// Runs well_form on f's weight and pushes (f) through every step. Trace
// notes record what was actually done to the relation.
StraightenResult straighten_chain(const WPolynomial& f, const WellFormOptions& options = {});

}  // namespace wps
