#pragma once

#include <stdexcept>
#include <string>

namespace fsusy {

/// Base for construction failures that the CLI maps to exit status 2.
class ConstructionError : public std::runtime_error {
 public:
  ConstructionError(const std::string& kind, const std::string& what, long level)
      : std::runtime_error(what), kind_(kind), level_(level) {}

  const std::string& kind() const noexcept { return kind_; }
  /// Basis level at which the construction broke down, -1 if not level-specific.
  long level() const noexcept { return level_; }

 private:
  std::string kind_;
  long level_;
};

/// The structure functions admit no unitary ladder representation at the requested depth.
class RepresentationInvalid : public ConstructionError {
 public:
  RepresentationInvalid(const std::string& what, long level)
      : ConstructionError("RepresentationInvalid", what, level) {}
};

class ProjectorDegenerate : public ConstructionError {
 public:
  ProjectorDegenerate(const std::string& what, long level)
      : ConstructionError("ProjectorDegenerate", what, level) {}
};

/// A partner Hamiltonian is negative on a physical level of its sector.
class FactorizationBroken : public ConstructionError {
 public:
  FactorizationBroken(const std::string& what, int sector, long level)
      : ConstructionError("FactorizationBroken", what, level), sector_(sector) {}

  int sector() const noexcept { return sector_; }

 private:
  int sector_;
};

/// Malformed run configuration or input file (CLI exit status 3).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace fsusy
