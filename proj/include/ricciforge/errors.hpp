#pragma once

#include <stdexcept>
#include <string>

namespace ricciforge {

struct PoleCoincidence : std::runtime_error {
  explicit PoleCoincidence(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

struct EmptySample : std::runtime_error {
  explicit EmptySample(const std::string& what) : std::runtime_error(what) {}
};

struct NotFound : std::runtime_error {
  explicit NotFound(const std::string& what) : std::runtime_error(what) {}
};

struct ModulusMismatch : std::runtime_error {
  explicit ModulusMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct NonpositiveW : std::runtime_error {
  explicit NonpositiveW(const std::string& what) : std::runtime_error(what) {}
};

struct NonpositiveF : std::runtime_error {
  explicit NonpositiveF(const std::string& what) : std::runtime_error(what) {}
};

struct SingularMetric : std::runtime_error {
  explicit SingularMetric(const std::string& what) : std::runtime_error(what) {}
};

struct QuadratureOverlap : std::runtime_error {
  explicit QuadratureOverlap(const std::string& what) : std::runtime_error(what) {}
};

struct DisconnectedGraph : std::runtime_error {
  explicit DisconnectedGraph(const std::string& what) : std::runtime_error(what) {}
};

struct ProfileTooLarge : std::runtime_error {
  explicit ProfileTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct Unsatisfiable : std::runtime_error {
  explicit Unsatisfiable(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace ricciforge
