#pragma once

#include <stdexcept>
#include <string>

namespace qssr {

struct Error : std::runtime_error {
  explicit Error(const std::string& message) : std::runtime_error(message) {}
};

/// A matrix inversion met an identically-zero determinant.
struct SingularMatrixError : Error {
  explicit SingularMatrixError(const std::string& message) : Error(message) {}
};

/// The algebraic system is not affine-linear in the requested block, so the
/// explicit solve engine refuses (general resolutions need not exist by
/// radicals at all).
struct NotLinearError : Error {
  explicit NotLinearError(const std::string& message) : Error(message) {}
};

/// A Groebner-backed decision ran out of its step or wall-clock budget.
struct InfeasibleError : Error {
  explicit InfeasibleError(const std::string& message) : Error(message) {}
};

/// Kernel and image of the Jacobian fail to split the space (TFPV
/// condition on the linearization).
struct KernelSplitError : Error {
  explicit KernelSplitError(const std::string& message) : Error(message) {}
};

}  // namespace qssr
