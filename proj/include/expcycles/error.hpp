#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace expcycles {

enum class ErrorKind {
  invalid_input,
  invalid_partition,
  not_a_cycle,
  too_large,
  precondition_failed,
  component_too_small,
  beta_graph_refuted,
  infeasible_degree,
  retry_limit,
  insufficient_data,
  stage_failure,
  target_out_of_range,
  assembly_violation,
  embedding_failed,
  no_closing_edge,
};

std::string_view to_string(ErrorKind kind);

/// Base class of every error the library throws. The kind is stable and is
/// what the CLI maps to exit codes and JSON error objects.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// A pipeline could not meet the postcondition of one of its steps on the
/// given instance. `stage` names the step.
class StageFailure : public Error {
 public:
  StageFailure(std::string stage, std::string diagnostic)
      : Error(ErrorKind::stage_failure, stage + ": " + diagnostic),
        stage_(std::move(stage)),
        diagnostic_(std::move(diagnostic)) {}

  const std::string& stage() const noexcept { return stage_; }
  const std::string& diagnostic() const noexcept { return diagnostic_; }

 private:
  std::string stage_;
  std::string diagnostic_;
};

}  // namespace expcycles
