#include "wps/curves.hpp"

#include "wps/error.hpp"

#include <algorithm>
#include <numeric>
#include <thread>

namespace wps {

PlaneCurve::PlaneCurve(WPolynomial f) : f_(std::move(f)), d_(0) {
  if (f_.variable_count() != 3) throw Error(Errc::Mismatch, "a plane curve needs exactly three variables");
  if (f_.is_zero()) throw Error(Errc::NotHomogeneous, "the zero polynomial does not define a curve");
  auto d = is_weighted_homogeneous(f_);
  if (!d) throw Error(Errc::NotHomogeneous, f_.to_string() + " is not weighted-homogeneous");
  d_ = *d;
}

std::vector<GeneralityClause> GeneralityReport::violated() const {
  std::vector<GeneralityClause> out;
  std::copy_if(clauses.begin(), clauses.end(), std::back_inserter(out), [](const auto& c) { return !c.holds; });
  return out;
}

GeneralityReport sufficiently_general(const PlaneCurve& c) {
  const Weight& a = c.weight();
  if (!is_well_formed(a)) throw Error(Errc::NotWellFormed, a.to_string() + " is not well-formed");
  const std::int64_t d = c.degree();
  const auto names = default_variable_names(3);
  GeneralityReport r;
  r.clauses.push_back({"degree>=2", std::nullopt, d >= 2, "d = " + std::to_string(d)});
  for (std::size_t i = 0; i < 3; ++i) {
    r.clauses.push_back({"degree>=a_i", i, d >= a[i], "d = " + std::to_string(d) + ", a = " + std::to_string(a[i])});
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (d % a[i] == 0) {
      Monomial m(3, 0);
      m[i] = static_cast<std::uint32_t>(d / a[i]);
      r.clauses.push_back({"pure-power", i, !c.poly().coefficient(m).is_zero(),
                           "needs " + monomial_to_string(m, names)});
      continue;
    }
    std::vector<Monomial> partners;
    for (std::size_t j = 0; j < 3; ++j) {
      if (j == i || d < a[j] || (d - a[j]) % a[i] != 0) continue;
      Monomial m(3, 0);
      m[j] = 1;
      m[i] += static_cast<std::uint32_t>((d - a[j]) / a[i]);
      partners.push_back(m);
    }
    r.clauses.push_back({"coprime-partner", i, !partners.empty(),
                         "needs j != " + std::to_string(i) + " with a_i | d - a_j"});
    std::string wanted;
    bool present = false;
    for (const auto& m : partners) {
      if (!wanted.empty()) wanted += " or ";
      wanted += monomial_to_string(m, names);
      present = present || !c.poly().coefficient(m).is_zero();
    }
    r.clauses.push_back({"partner-term", i, present, partners.empty() ? "no candidate term" : "needs " + wanted});
  }
  r.ok = std::all_of(r.clauses.begin(), r.clauses.end(), [](const auto& cl) { return cl.holds; });
  return r;
}

void require_sufficiently_general(const PlaneCurve& c) {
  auto r = sufficiently_general(c);
  if (r.ok) return;
  std::string why;
  for (const auto& cl : r.violated()) {
    if (!why.empty()) why += "; ";
    why += cl.name + (cl.index ? "[" + std::to_string(*cl.index) + "]" : "") + ": " + cl.detail;
  }
  throw Error(Errc::NotSufficientlyGeneral, c.poly().to_string() + " is not sufficiently general (" + why + ")");
}

VertexMembership vertex_membership(const PlaneCurve& c) {
  require_sufficiently_general(c);
  VertexMembership v;
  const Field field = c.poly().field();
  for (std::size_t i = 0; i < 3; ++i) {
    v.by_rule[i] = c.degree() % c.weight()[i] != 0;
    std::vector<Scalar> e(3, Scalar::zero(field));
    e[i] = Scalar::one(field);
    v.by_evaluation[i] = evaluate(c.poly(), e).is_zero();
  }
  return v;
}

bool is_singular_at(const PlaneCurve& c, const std::vector<Scalar>& coords) {
  if (std::all_of(coords.begin(), coords.end(), [](const Scalar& s) { return s.is_zero(); })) {
    throw Error(Errc::NotAConePoint, "the origin is not a point of the affine cone");
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (!evaluate(partial(c.poly(), i), coords).is_zero()) return false;
  }
  return true;
}

PlaneCurve straight_cover(const PlaneCurve& c) { return PlaneCurve(power_substitute(c.poly())); }

EdgeReport edge_squarefree_check(const PlaneCurve& c) {
  require_sufficiently_general(c);
  PlaneCurve cover = straight_cover(c);
  EdgeReport r;
  r.all_squarefree = true;
  for (std::size_t i = 0; i < 3; ++i) {
    UPolynomial g = restrict_to_edge(cover.poly(), i);
    if (g.is_zero()) {
      throw Error(Errc::DegenerateEdge, "the cover vanishes identically on edge " + std::to_string(i));
    }
    bool sf = is_squarefree(g);
    r.all_squarefree = r.all_squarefree && sf;
    r.edges.push_back({i, g, sf});
  }
  return r;
}

bool degree_weight_admissible(std::int64_t d, const Weight& a) {
  if (a.size() != 3 || !is_well_formed(a) || d < 2) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (d < a[i]) return false;
  }
  for (std::size_t i = 0; i < 3; ++i) {
    if (d % a[i] == 0) continue;
    bool partner = false;
    for (std::size_t j = 0; j < 3; ++j) {
      partner = partner || (j != i && (d - a[j]) % a[i] == 0);
    }
    if (!partner) return false;
  }
  return true;
}

void require_degree_weight(std::int64_t d, const Weight& a) {
  if (!degree_weight_admissible(d, a)) {
    throw Error(Errc::InvalidDegreeWeight, "degree " + std::to_string(d) + " and weight " + a.to_string() +
                                               " violate the sufficiently-general numeric constraints");
  }
}

std::int64_t branching_index(std::int64_t d, const Weight& a) {
  require_degree_weight(d, a);
  const std::int64_t A = a.product();
  std::int64_t b = 0;
  for (std::size_t i = 0; i < 3; ++i) {
    b += (d - 1) * (a[i] - 1);
    b += d % a[i] == 0 ? a[i] - 1 : A - 1;
  }
  return b;
}

Rational genus_value(std::int64_t d, const Weight& a) {
  const std::int64_t b = branching_index(d, a);
  const std::int64_t A = a.product();
  // (1/A) * ((d-1)(d-2)/2 - (b/2 + 1 - A))
  return Rational(BigInt((d - 1) * (d - 2) - b - 2 + 2 * A), BigInt(2 * A));
}

std::int64_t genus(std::int64_t d, const Weight& a) {
  Rational g = genus_value(d, a);
  if (!g.is_integer() || g.sign() < 0) {
    throw Error(Errc::NonIntegerGenus, "degree-genus formula gives " + g.to_string() + " for d = " +
                                           std::to_string(d) + ", a = " + a.to_string());
  }
  return g.numerator().convert_to<std::int64_t>();
}

std::int64_t straight_genus(std::int64_t d) { return (d - 1) * (d - 2) / 2; }

bool riemann_hurwitz_check(const Rational& g_cover, const Rational& g_base, std::int64_t deg, std::int64_t b) {
  return 2 * g_cover - 2 == Rational(deg) * (2 * g_base - 2) + Rational(b);
}

BranchCensus branch_census(const PlaneCurve& c) {
  EdgeReport edges = edge_squarefree_check(c);
  BranchCensus census;
  census.d = c.degree();
  census.weights = c.weight();
  for (std::size_t i = 0; i < 3; ++i) census.vertices[i] = c.degree() % c.weight()[i] != 0;
  for (const auto& e : edges.edges) {
    CensusEdge ce;
    ce.i = e.i;
    ce.count = distinct_root_count(e.restriction, true);
    ce.predicted = c.degree() % c.weight()[e.i] == 0 ? c.degree() : c.degree() - 1;
    ce.squarefree = e.squarefree;
    ce.agrees = ce.count == ce.predicted;
    census.edges.push_back(ce);
  }
  return census;
}

std::vector<Weight> coprime_triples(std::int64_t max_entry) {
  std::vector<Weight> out;
  for (std::int64_t x = 1; x <= max_entry; ++x) {
    for (std::int64_t y = 1; y <= max_entry; ++y) {
      for (std::int64_t z = 1; z <= max_entry; ++z) {
        if (std::gcd(x, y) == 1 && std::gcd(x, z) == 1 && std::gcd(y, z) == 1) out.emplace_back(std::vector{x, y, z});
      }
    }
  }
  return out;
}

std::vector<SweepRow> genus_sweep(std::int64_t max_entry, std::int64_t max_degree, unsigned jobs) {
  const auto triples = coprime_triples(max_entry);
  std::vector<std::vector<SweepRow>> per_triple(triples.size());
  auto work = [&](std::size_t t) {
    const Weight& a = triples[t];
    for (std::int64_t d = 2; d <= max_degree; ++d) {
      if (!degree_weight_admissible(d, a)) continue;
      SweepRow row;
      row.a = a;
      row.d = d;
      row.b = branching_index(d, a);
      row.genus = genus_value(d, a);
      row.integral = row.genus.is_integer() && row.genus.sign() >= 0;
      row.rh = riemann_hurwitz_check(Rational(straight_genus(d)), row.genus, a.product(), row.b);
      per_triple[t].push_back(row);
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1) {
    for (std::size_t t = 0; t < triples.size(); ++t) work(t);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < jobs; ++w) {
      pool.emplace_back([&, w] {
        for (std::size_t t = w; t < triples.size(); t += jobs) work(t);
      });
    }
    for (auto& th : pool) th.join();
  }
  std::vector<SweepRow> rows;
  for (auto& v : per_triple) rows.insert(rows.end(), v.begin(), v.end());
  return rows;
}

}  // namespace wps
