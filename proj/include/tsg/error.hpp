#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace tsg {

/// Precondition or domain violation. `code` is a stable machine-readable tag
/// (e.g. "repeated_point", "not_subgroup") surfaced verbatim by the CLI.
class DomainError : public std::runtime_error {
public:
  DomainError(std::string code, const std::string &message,
              std::optional<std::string> witness = std::nullopt)
      : std::runtime_error(message), code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string &code() const noexcept { return code_; }
  const std::optional<std::string> &witness() const noexcept { return witness_; }

private:
  std::string code_;
  std::optional<std::string> witness_;
};

/// A brute-force postcondition check failed. Never expected on valid input.
class VerificationFailure : public std::runtime_error {
public:
  VerificationFailure(std::string code, const std::string &message,
                      std::optional<std::string> witness = std::nullopt)
      : std::runtime_error(message), code_(std::move(code)),
        witness_(std::move(witness)) {}

  const std::string &code() const noexcept { return code_; }
  const std::optional<std::string> &witness() const noexcept { return witness_; }

private:
  std::string code_;
  std::optional<std::string> witness_;
};

} // namespace tsg
