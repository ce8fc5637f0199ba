#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace modpimage {

// Error taxonomy shared by all modules. Exit-code contract for the CLI:
// 0 success, 2 unrealizable/contract/domain/parameter, 3 capacity.
enum class ErrorKind {
  Parameter,
  Domain,
  NonUnit,
  Capacity,
  Contract,
  Unrealizable,
  Parse,
  TheoremViolation,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }
  int exit_code() const { return kind_ == ErrorKind::Capacity ? 3 : 2; }

 private:
  ErrorKind kind_;
};

/// Raised by infer() when no (alpha, beta) produces the requested trace
/// count; carries the nearest realizable values (or -1 when none exists
/// on that side).
class UnrealizableError : public Error {
 public:
  UnrealizableError(std::uint64_t t, std::int64_t below, std::int64_t above,
                    const std::string& what)
      : Error(ErrorKind::Unrealizable, what), t_(t), below_(below), above_(above) {}

  std::uint64_t t() const { return t_; }
  std::int64_t nearest_below() const { return below_; }
  std::int64_t nearest_above() const { return above_; }

 private:
  std::uint64_t t_;
  std::int64_t below_;
  std::int64_t above_;
};

// Enumeration / closure budgets. MODPIMAGE_CAP (and the CLI --cap flag)
// override both.
struct Caps {
  std::uint64_t enumeration = std::uint64_t{1} << 26;
  std::uint64_t census = 100'000'000;
};

Caps default_caps();

}  // namespace modpimage
