#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Dense>

namespace confact {

using Vec3 = Eigen::Vector3d;
using Vec5 = Eigen::Matrix<double, 5, 1>;
using Mat3 = Eigen::Matrix3d;
using Mat4 = Eigen::Matrix4d;
using Mat5 = Eigen::Matrix<double, 5, 5>;

/// Seed used by every sampler when the caller does not supply one.
inline constexpr std::uint64_t kDefaultSeed = 24221;
inline constexpr std::size_t kDefaultSamples = 64;

/**
 * @brief Numerical thresholds.
 *
 * `eps` governs invariant checks on group and algebra elements; `rank`
 * governs every rank and subspace decision (relative to the largest
 * singular value of the matrix under test).
 */
struct Tolerances {
  double eps = 1e-9;
  double rank = 1e-8;
};

enum class ErrorCode {
  InvariantViolation,
  NotNull,
  ZeroVector,
  ZeroInput,
  SingularCase,
  DecompositionFailure,
  NotASubalgebra,
  DimensionTooSmall,
  InternalInconsistency,
  ModelMismatch,
  OutsideIdentityComponent,
  UnknownLabel,
  MissingParameter,
  UnknownInvariant,
  Parse,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::NotNull: return "NotNull";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::ZeroInput: return "ZeroInput";
    case ErrorCode::SingularCase: return "SingularCase";
    case ErrorCode::DecompositionFailure: return "DecompositionFailure";
    case ErrorCode::NotASubalgebra: return "NotASubalgebra";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::ModelMismatch: return "ModelMismatch";
    case ErrorCode::OutsideIdentityComponent: return "OutsideIdentityComponent";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::MissingParameter: return "MissingParameter";
    case ErrorCode::UnknownInvariant: return "UnknownInvariant";
    case ErrorCode::Parse: return "Parse";
  }
  return "Unknown";
}

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

enum class Model { Euclid, Lorentz };

inline std::string_view to_string(Model m) {
  return m == Model::Euclid ? "euclid" : "lorentz";
}

}  // namespace confact
