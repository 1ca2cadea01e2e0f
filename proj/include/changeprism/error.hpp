// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace changeprism {

enum class ErrorCode {
  NotARepository,
  UnknownBranch,
  UnknownCommit,
  CorruptObject,
  MalformedHunks,
  RegionOutOfBounds,
  UnknownTypeKey,
  IoError,
  SchemaVersionMismatch,
  MissingIndex,
  CorruptDocument,
  UnknownCommitInImport,
  MalformedImportFile,
  InvalidConfig,
};

std::string_view error_code_name(ErrorCode code);

/// The one exception type thrown across library boundaries. Callers that
/// need to distinguish failures switch on code().
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace changeprism
