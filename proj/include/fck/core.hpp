#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace fck {

// Error raised by bad user input: malformed scenarios, invalid configs,
// out-of-range arguments on the public API.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Error raised when a simulation invariant breaks at runtime. Carries the
// step and agent the failure was observed at when known.
class SimError : public std::runtime_error {
 public:
  explicit SimError(const std::string& what, int step = -1, std::int32_t agent = -1)
      : std::runtime_error(what), step_(step), agent_(agent) {}
  int step() const { return step_; }
  std::int32_t agent() const { return agent_; }

 private:
  int step_;
  std::int32_t agent_;
};

enum class AgentKind { Region, Institution, Facility };

struct AgentId {
  std::int32_t value = -1;
  bool valid() const { return value >= 0; }
  auto operator<=>(const AgentId&) const = default;
};

struct ResourceId {
  std::int64_t value = -1;
  bool valid() const { return value >= 0; }
  auto operator<=>(const ResourceId&) const = default;
};

struct CompId {
  std::int32_t value = -1;
  bool valid() const { return value >= 0; }
  auto operator<=>(const CompId&) const = default;
};

enum class DecayMode { Manual, Never, Lazy };

inline std::string to_string(AgentKind kind) {
  switch (kind) {
    case AgentKind::Region: return "Region";
    case AgentKind::Institution: return "Institution";
    case AgentKind::Facility: return "Facility";
  }
  return "?";
}

}  // namespace fck
