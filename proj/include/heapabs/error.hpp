// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace heapabs {

// Stable machine-readable codes. Shared by thrown errors and by the
// violation lists returned from the validators; the spelling returned by
// to_string() is part of the CLI contract and must not change.
enum class ErrorCode {
  // Component / heap validation.
  kUnknownEndpoint,
  kEdgeKindMismatch,
  kUnreachableNode,
  kCycleInDag,
  kNoCycle,
  kMissingTreeParent,
  kComponentIdClash,
  kDuplicateId,
  kInvalidId,
  // Operation preconditions.
  kUnknownNode,
  kSameNode,
  kLayoutMismatch,
  kEmptyComponent,
  kDomainMismatch,
  kBudgetExceeded,
  // Witness checking.
  kVariableSetMismatch,
  kNodeMapNotTotal,
  kNodeMapUnknownSource,
  kNodeMapBadImage,
  kNodeMapNotOnto,
  kEdgeMapNotTotal,
  kEdgeMapUnknownSource,
  kEdgeMapIncompatible,
  kEdgeMapNotOnto,
  kImageEdgeMissing,
  // Text formats.
  kSyntaxError,
  kUnknownField,
  kMissingField,
  kWrongType,
  kBadLayout,
  kBadEdge,
  // Internal self-checks.
  kInvariantBreach,
};

std::string_view to_string(ErrorCode code);

enum class ErrorCategory {
  kParse,         // malformed text
  kSchema,        // well-formed text with the wrong structure
  kModel,         // structure fine, model invariant violated
  kPrecondition,  // API misuse (unknown node, wrong layout, ...)
  kInternal,      // a self-check of the library failed
};

std::string_view to_string(ErrorCategory category);

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, ErrorCode code, const std::string& message,
        std::string location = {});

  ErrorCategory category() const { return category_; }
  ErrorCode code() const { return code_; }
  // Where the problem was found: "line 3, column 7", a JSON pointer, or
  // "component 2". Empty when not applicable.
  const std::string& location() const { return location_; }

 private:
  ErrorCategory category_;
  ErrorCode code_;
  std::string location_;
};

struct Violation {
  ErrorCode code;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

}  // namespace heapabs
