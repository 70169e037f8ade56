#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace wps {

// Weight vector (a0, ..., an): at least two entries, each >= 1.
class Weight {
 public:
  // P^1 weights; only here so trace records can be default-constructed.
  Weight() : entries_{1, 1} {}
  // Throws Errc::InvalidWeight.
  explicit Weight(std::vector<std::int64_t> entries);

  // Comma-separated positive integers, e.g. "12,20,30". Throws Errc::InvalidWeight.
  static Weight parse(std::string_view text);
  static Weight straight(std::size_t length) { return Weight(std::vector<std::int64_t>(length, 1)); }

  std::size_t size() const { return entries_.size(); }
  std::int64_t operator[](std::size_t i) const { return entries_[i]; }
  const std::vector<std::int64_t>& entries() const { return entries_; }
  std::int64_t lcm() const;
  std::int64_t product() const;
  bool is_straight() const;

  friend bool operator==(const Weight&, const Weight&) = default;
  friend auto operator<=>(const Weight&, const Weight&) = default;

  // "(12,20,30)"
  std::string to_string() const;
  // "12,20,30"
  std::string to_csv() const;

 private:
  std::vector<std::int64_t> entries_;
};

bool is_well_formed(const Weight& a);

enum class ReductionCase { I, II };

std::string_view case_name(ReductionCase c);

// One reduction step. Case I divides every entry by d; case II divides every
// entry except the spared one.
struct WellFormStep {
  ReductionCase kind = ReductionCase::I;
  std::int64_t d = 1;
  std::optional<std::size_t> spared;
  Weight before;
  Weight after;
  // One of "unchanged-regraded", "power-raised", "re-expressed".
  std::string ideal_note;
};

struct WellFormTrace {
  std::vector<WellFormStep> steps;
};

struct PlannedStep {
  std::int64_t d = 1;
  std::optional<std::size_t> spared;  // absent means case I
};

// Parses "2,5@0,2@2,3@1": a bare divisor is a case I step, "d@j" a case II
// step sparing index j.
std::vector<PlannedStep> parse_plan(std::string_view text);

struct WellFormOptions {
  // Divide by the smallest prime factor of the available divisor instead of
  // the whole gcd.
  bool prime_steps = false;
  // Explicit step sequence; validated step by step and required to end on a
  // well-formed weight.
  std::optional<std::vector<PlannedStep>> plan;
};

struct WellFormResult {
  Weight weight;
  WellFormTrace trace;
};

// Applies a single step, checking its preconditions (Errc::BadCase).
Weight apply_reduction(const Weight& a, std::int64_t d, ReductionCase kind,
                       std::optional<std::size_t> spared);

// Default order: case I until the total gcd is 1, then case II scanning the
// spared index upward from 0 after every step.
WellFormResult well_form(const Weight& a, const WellFormOptions& options = {});

}  // namespace wps
