// SPDX-License-Identifier: MIT
#pragma once

#include <stdexcept>
#include <string>

namespace ghzec {

/// Base class for all library errors.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Requested register size (or derived layout) exceeds the simulable range.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Gate indices collide, lie out of range, or a custom matrix is not unitary.
class InvalidGateError : public Error {
 public:
  using Error::Error;
};

/// Qubit subset passed to a reduction is empty, unsorted, or out of range.
class InvalidSubsetError : public Error {
 public:
  using Error::Error;
};

/// Operands disagree in size (state widths, matrix dimensions, ...).
class DimensionError : public Error {
 public:
  using Error::Error;
};

/// Amplitude vector cannot represent a normalized pure state.
class InvalidStateError : public Error {
 public:
  using Error::Error;
};

/// Erasure flags are malformed: bad block/position, duplicate block, or a
/// flag aimed at the restore block.
class InvalidFlagsError : public Error {
 public:
  using Error::Error;
};

/// Erasure pattern is malformed (duplicate blocks, bad indices).
class InvalidPatternError : public Error {
 public:
  using Error::Error;
};

/// More erasure events than the code can tolerate.
class BudgetError : public Error {
 public:
  using Error::Error;
};

}  // namespace ghzec
