#include "wps/weights.hpp"

#include "wps/error.hpp"

#include <charconv>
#include <numeric>

namespace wps {

namespace {

constexpr std::int64_t kMaxEntry = 1'000'000'000;

std::int64_t smallest_prime_factor(std::int64_t n) {
  for (std::int64_t q = 2; q * q <= n; ++q) {
    if (n % q == 0) return q;
  }
  return n;
}

std::int64_t complement_gcd(const Weight& a, std::size_t skip) {
  std::int64_t g = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (i != skip) g = std::gcd(g, a[i]);
  }
  return g;
}

std::int64_t total_gcd(const Weight& a) {
  std::int64_t g = 0;
  for (auto x : a.entries()) g = std::gcd(g, x);
  return g;
}

bool parse_int(std::string_view s, std::int64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

}  // namespace

Weight::Weight(std::vector<std::int64_t> entries) : entries_(std::move(entries)) {
  if (entries_.size() < 2) throw Error(Errc::InvalidWeight, "a weight needs at least two entries");
  for (auto x : entries_) {
    if (x < 1 || x > kMaxEntry) {
      throw Error(Errc::InvalidWeight, "weight entry " + std::to_string(x) + " out of range");
    }
  }
}

Weight Weight::parse(std::string_view text) {
  std::vector<std::int64_t> entries;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view piece = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!piece.empty() && piece.front() == ' ') piece.remove_prefix(1);
    while (!piece.empty() && piece.back() == ' ') piece.remove_suffix(1);
    std::int64_t value = 0;
    if (!parse_int(piece, value)) {
      throw Error(Errc::InvalidWeight, "malformed weight list '" + std::string(text) + "'");
    }
    entries.push_back(value);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return Weight(std::move(entries));
}

std::int64_t Weight::lcm() const {
  std::int64_t l = 1;
  for (auto x : entries_) l = std::lcm(l, x);
  return l;
}

std::int64_t Weight::product() const {
  std::int64_t p = 1;
  for (auto x : entries_) p *= x;
  return p;
}

bool Weight::is_straight() const {
  for (auto x : entries_) {
    if (x != 1) return false;
  }
  return true;
}

std::string Weight::to_string() const { return "(" + to_csv() + ")"; }

std::string Weight::to_csv() const {
  std::string out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(entries_[i]);
  }
  return out;
}

bool is_well_formed(const Weight& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (complement_gcd(a, i) != 1) return false;
  }
  return true;
}

std::string_view case_name(ReductionCase c) { return c == ReductionCase::I ? "I" : "II"; }

std::vector<PlannedStep> parse_plan(std::string_view text) {
  std::vector<PlannedStep> plan;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == text.npos ? text.npos : comma - start);
    PlannedStep step;
    std::size_t at = item.find('@');
    std::int64_t j = 0;
    bool ok = parse_int(item.substr(0, at), step.d);
    if (at != std::string_view::npos) {
      ok = ok && parse_int(item.substr(at + 1), j) && j >= 0;
      step.spared = static_cast<std::size_t>(j);
    }
    if (!ok || step.d < 2) {
      throw Error(Errc::InvalidArgument, "malformed plan step '" + std::string(item) + "'");
    }
    plan.push_back(step);
    if (comma == text.npos) break;
    start = comma + 1;
  }
  return plan;
}

Weight apply_reduction(const Weight& a, std::int64_t d, ReductionCase kind,
                       std::optional<std::size_t> spared) {
  if (d < 1) throw Error(Errc::BadCase, "divisor must be positive");
  std::vector<std::int64_t> out = a.entries();
  if (kind == ReductionCase::I) {
    if (spared) throw Error(Errc::BadCase, "case I has no spared index");
    for (auto& x : out) {
      if (x % d != 0) {
        throw Error(Errc::BadCase, std::to_string(d) + " does not divide every entry of " + a.to_string());
      }
      x /= d;
    }
    return Weight(std::move(out));
  }
  if (!spared || *spared >= a.size()) throw Error(Errc::BadCase, "case II needs a valid spared index");
  const std::size_t j = *spared;
  if (std::gcd(d, a[j]) != 1) {
    throw Error(Errc::BadCase, std::to_string(d) + " is not coprime to the spared entry " + std::to_string(a[j]));
  }
  for (std::size_t i = 0; i < out.size(); ++i) {
    if (i == j) continue;
    if (out[i] % d != 0) {
      throw Error(Errc::BadCase, std::to_string(d) + " does not divide entry " + std::to_string(i) + " of " +
                                     a.to_string());
    }
    out[i] /= d;
  }
  return Weight(std::move(out));
}

namespace {

WellFormStep make_step(const Weight& before, std::int64_t d, std::optional<std::size_t> spared) {
  WellFormStep step;
  step.kind = spared ? ReductionCase::II : ReductionCase::I;
  step.d = d;
  step.spared = spared;
  step.before = before;
  step.after = apply_reduction(before, d, step.kind, spared);
  // Without a polynomial the conservative ideal transform is recorded; the
  // straightening pipeline overwrites this with what it actually did.
  step.ideal_note = spared ? "power-raised" : "unchanged-regraded";
  return step;
}

}  // namespace

WellFormResult well_form(const Weight& a, const WellFormOptions& options) {
  WellFormResult result{a, {}};
  if (options.plan) {
    for (const auto& planned : *options.plan) {
      result.trace.steps.push_back(make_step(result.weight, planned.d, planned.spared));
      result.weight = result.trace.steps.back().after;
    }
    if (!is_well_formed(result.weight)) {
      throw Error(Errc::InvalidArgument, "plan ends at " + result.weight.to_string() + ", which is not well-formed");
    }
    return result;
  }

  auto divisor = [&](std::int64_t g) { return options.prime_steps ? smallest_prime_factor(g) : g; };

  for (std::int64_t g = total_gcd(result.weight); g > 1; g = total_gcd(result.weight)) {
    result.trace.steps.push_back(make_step(result.weight, divisor(g), std::nullopt));
    result.weight = result.trace.steps.back().after;
  }
  bool progressed = true;
  while (progressed) {
    progressed = false;
    for (std::size_t j = 0; j < result.weight.size(); ++j) {
      std::int64_t g = complement_gcd(result.weight, j);
      if (g > 1) {
        result.trace.steps.push_back(make_step(result.weight, divisor(g), j));
        result.weight = result.trace.steps.back().after;
        progressed = true;
        break;
      }
    }
  }
  return result;
}

}  // namespace wps
