#pragma once

#include <cstddef>
#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

#ifndef ODDHOLE_MAX_VERTICES
#define ODDHOLE_MAX_VERTICES 512
#endif

namespace oddhole {

using Vertex = int;

/// Upper bound on graph order; adjacency rows are fixed-width bitsets of this size.
inline constexpr std::size_t kMaxVertices = ODDHOLE_MAX_VERTICES;
static_assert(kMaxVertices % 64 == 0, "ODDHOLE_MAX_VERTICES must be a multiple of 64");

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed input or a violated precondition on caller-supplied data.
class InputError : public Error {
 public:
  using Error::Error;
};

/// Search budgets are counted in search-tree nodes.
struct Budget {
  std::uint64_t max_nodes = 20'000'000;

  /// Reads ODDHOLE_BUDGET when set and parseable, otherwise returns the default.
  static Budget from_env() {
    Budget b;
    if (const char* s = std::getenv("ODDHOLE_BUDGET")) {
      char* end = nullptr;
      auto v = std::strtoull(s, &end, 10);
      if (end != s && *end == '\0' && v > 0) b.max_nodes = v;
    }
    return b;
  }
};

enum class BudgetState { within, exceeded };

inline std::string_view to_string(BudgetState s) {
  return s == BudgetState::within ? "within" : "exceeded";
}

class BudgetMeter {
 public:
  explicit BudgetMeter(Budget b = {}) : limit_(b.max_nodes) {}

  /// Consumes one node; returns false once the limit is hit.
  bool tick() {
    if (used_ >= limit_) {
      exceeded_ = true;
      return false;
    }
    ++used_;
    return true;
  }

  bool exceeded() const { return exceeded_; }
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }
  BudgetState state() const { return exceeded_ ? BudgetState::exceeded : BudgetState::within; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
  bool exceeded_ = false;
};

/// How a search ended.
enum class SearchStatus { complete, stopped, budget_exceeded };

/// Result of a definitional re-check; `reason` says what failed.
struct Check {
  bool ok = true;
  std::string reason;

  static Check pass() { return {}; }
  static Check fail(std::string why) { return {false, std::move(why)}; }
  explicit operator bool() const { return ok; }
};

/// Outcome of checking one statement on one instance.
enum class Verdict { consistent, violation, not_applicable, unknown };

inline std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::violation: return "violation";
    case Verdict::not_applicable: return "not_applicable";
    case Verdict::unknown: return "unknown";
  }
  return "unknown";
}

inline Verdict verdict_from_string(std::string_view s) {
  for (auto v : {Verdict::consistent, Verdict::violation, Verdict::not_applicable, Verdict::unknown})
    if (to_string(v) == s) return v;
  throw InputError("unknown verdict '" + std::string(s) + "'");
}

}  // namespace oddhole
