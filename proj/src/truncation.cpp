#include "wps/truncation.hpp"

#include "wps/error.hpp"

#include <algorithm>
#include <numeric>

namespace wps {

namespace {

// Guards against enumerations that would not finish in reasonable time.
constexpr std::size_t kMaxMonomials = 5'000'000;

void enumerate(const Weight& a, std::size_t i, std::int64_t remaining, Monomial& current,
               std::vector<Monomial>& out) {
  if (i + 1 == a.size()) {
    if (remaining % a[i] != 0) return;
    current[i] = static_cast<std::uint32_t>(remaining / a[i]);
    out.push_back(current);
    if (out.size() > kMaxMonomials) throw Error(Errc::TooLarge, "graded piece too large to enumerate");
    return;
  }
  for (std::int64_t e = 0; e * a[i] <= remaining; ++e) {
    current[i] = static_cast<std::uint32_t>(e);
    enumerate(a, i + 1, remaining - e * a[i], current, out);
  }
  current[i] = 0;
}

bool divides(const Monomial& g, const Monomial& m) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (g[i] > m[i]) return false;
  }
  return true;
}

}  // namespace

std::vector<Monomial> graded_piece_basis(const Weight& a, std::int64_t d) {
  if (d < 0) throw Error(Errc::InvalidArgument, "degree must be non-negative");
  std::vector<Monomial> out;
  Monomial current(a.size(), 0);
  enumerate(a, 0, d, current, out);
  std::sort(out.begin(), out.end(), TermOrder{&a});
  return out;
}

std::int64_t minimal_veronese_bound(const Weight& a, std::int64_t d) {
  std::int64_t b = 0;
  for (auto x : a.entries()) b = std::max(b, std::lcm(x, d));
  return b;
}

std::int64_t default_veronese_bound(const Weight& a, std::int64_t d) {
  return d * a.lcm() * static_cast<std::int64_t>(a.size());
}

std::vector<Monomial> veronese_generators(const Weight& a, std::int64_t d, std::int64_t degree_bound) {
  if (d < 1) throw Error(Errc::InvalidArgument, "truncation degree must be at least 1");
  const std::int64_t need = minimal_veronese_bound(a, d);
  if (degree_bound < need) {
    throw Error(Errc::BoundTooSmall, "degree bound " + std::to_string(degree_bound) + " is below " +
                                         std::to_string(need) + ", the degree of a pure-power generator");
  }
  // A submonoid element is decomposable iff a smaller generator divides it:
  // the quotient then also has degree divisible by d.
  std::vector<Monomial> generators;
  std::size_t seen = 0;
  for (std::int64_t k = d; k <= degree_bound; k += d) {
    for (auto& m : graded_piece_basis(a, k)) {
      if (++seen > kMaxMonomials) throw Error(Errc::TooLarge, "degree bound too large to saturate");
      bool decomposable = std::any_of(generators.begin(), generators.end(),
                                      [&](const Monomial& g) { return divides(g, m); });
      if (!decomposable) generators.push_back(std::move(m));
    }
  }
  return generators;
}

std::vector<Monomial> veronese_generators(const Weight& a, std::int64_t d) {
  return veronese_generators(a, d, default_veronese_bound(a, d));
}

Weight regrade(const Weight& a, std::int64_t d, ReductionCase kind, std::optional<std::size_t> spared) {
  return apply_reduction(a, d, kind, spared);
}

TransformedIdeal transform_principal_ideal(const WPolynomial& f, std::int64_t d, ReductionCase kind,
                                           std::optional<std::size_t> spared) {
  if (f.is_zero()) throw Error(Errc::NotHomogeneous, "the zero polynomial generates no graded ideal");
  auto deg = is_weighted_homogeneous(f);
  if (!deg) throw Error(Errc::NotHomogeneous, "ideal transform needs a weighted-homogeneous generator");
  const Weight target = regrade(f.weight(), d, kind, spared);

  if (kind == ReductionCase::I) return {f.regraded(target), "unchanged-regraded", *deg / d};

  // Every monomial of f has the same spared exponent mod d (a_j is a unit mod
  // d), so either all are divisible or every monomial of f^d is.
  const std::size_t j = *spared;
  bool divisible = std::all_of(f.terms().begin(), f.terms().end(),
                               [&](const auto& t) { return t.first[j] % d == 0; });
  WPolynomial source = divisible ? f : f.pow(static_cast<std::uint64_t>(d));
  WPolynomial out(target, f.field());
  for (const auto& [m, c] : source.terms()) {
    Monomial e = m;
    e[j] /= static_cast<std::uint32_t>(d);
    out.add_term(e, c);
  }
  return {out, divisible ? "re-expressed" : "power-raised", weighted_degree(out)};
}

StraightenResult straighten_chain(const WPolynomial& f, const WellFormOptions& options) {
  if (f.is_zero() || !is_weighted_homogeneous(f)) {
    throw Error(Errc::NotHomogeneous, "straightening needs a weighted-homogeneous relation");
  }
  WellFormResult wf = well_form(f.weight(), options);
  std::vector<std::int64_t> multiplier(f.variable_count(), 1);
  WPolynomial relation = f;
  for (auto& step : wf.trace.steps) {
    TransformedIdeal t = transform_principal_ideal(relation, step.d, step.kind, step.spared);
    relation = t.generator;
    step.ideal_note = t.tag;
    if (step.spared) multiplier[*step.spared] *= step.d;
  }
  auto base = default_variable_names(f.variable_count());
  std::vector<std::string> names;
  for (std::size_t i = 0; i < base.size(); ++i) {
    names.push_back(multiplier[i] == 1 ? base[i] : base[i] + "^" + std::to_string(multiplier[i]));
  }
  GradedPresentation p{wf.weight, names, {relation}, {weighted_degree(relation)}};
  return {p, wf.trace};
}

}  // namespace wps
