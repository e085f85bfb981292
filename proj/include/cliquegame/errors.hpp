#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace cliquegame {

/// Malformed or out-of-contract input (bad vertex id, invalid parameters,
/// malformed JSON). Maps to exit code 2 in the CLI and HTTP 400 in the service.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A move would create a monochromatic (k+1)-clique. Carries the clique.
class RuleViolation : public std::runtime_error {
 public:
  RuleViolation(const std::string& what, std::vector<int> clique)
      : std::runtime_error(what), clique_(std::move(clique)) {}

  const std::vector<int>& clique() const noexcept { return clique_; }

 private:
  std::vector<int> clique_;
};

/// Out-of-turn move or a move against a finished game.
class ProtocolError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Search exceeded its node budget; no answer is implied.
class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(long long nodes)
      : std::runtime_error("search budget exhausted after " + std::to_string(nodes) + " nodes"),
        nodes_(nodes) {}

  long long nodes() const noexcept { return nodes_; }

 private:
  long long nodes_;
};

}  // namespace cliquegame
