// Copyright 2026 The heapabs Authors.
// SPDX-License-Identifier: Apache-2.0

#include "heapabs/error.hpp"

namespace heapabs {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnknownEndpoint: return "UnknownEndpoint";
    case ErrorCode::kEdgeKindMismatch: return "EdgeKindMismatch";
    case ErrorCode::kUnreachableNode: return "UnreachableNode";
    case ErrorCode::kCycleInDag: return "CycleInDag";
    case ErrorCode::kNoCycle: return "NoCycle";
    case ErrorCode::kMissingTreeParent: return "MissingTreeParent";
    case ErrorCode::kComponentIdClash: return "ComponentIdClash";
    case ErrorCode::kDuplicateId: return "DuplicateId";
    case ErrorCode::kInvalidId: return "InvalidId";
    case ErrorCode::kUnknownNode: return "UnknownNode";
    case ErrorCode::kSameNode: return "SameNode";
    case ErrorCode::kLayoutMismatch: return "LayoutMismatch";
    case ErrorCode::kEmptyComponent: return "EmptyComponent";
    case ErrorCode::kDomainMismatch: return "DomainMismatch";
    case ErrorCode::kBudgetExceeded: return "BudgetExceeded";
    case ErrorCode::kVariableSetMismatch: return "VariableSetMismatch";
    case ErrorCode::kNodeMapNotTotal: return "NodeMapNotTotal";
    case ErrorCode::kNodeMapUnknownSource: return "NodeMapUnknownSource";
    case ErrorCode::kNodeMapBadImage: return "NodeMapBadImage";
    case ErrorCode::kNodeMapNotOnto: return "NodeMapNotOnto";
    case ErrorCode::kEdgeMapNotTotal: return "EdgeMapNotTotal";
    case ErrorCode::kEdgeMapUnknownSource: return "EdgeMapUnknownSource";
    case ErrorCode::kEdgeMapIncompatible: return "EdgeMapIncompatible";
    case ErrorCode::kEdgeMapNotOnto: return "EdgeMapNotOnto";
    case ErrorCode::kImageEdgeMissing: return "ImageEdgeMissing";
    case ErrorCode::kSyntaxError: return "SyntaxError";
    case ErrorCode::kUnknownField: return "UnknownField";
    case ErrorCode::kMissingField: return "MissingField";
    case ErrorCode::kWrongType: return "WrongType";
    case ErrorCode::kBadLayout: return "BadLayout";
    case ErrorCode::kBadEdge: return "BadEdge";
    case ErrorCode::kInvariantBreach: return "InvariantBreach";
  }
  return "Unknown";
}

std::string_view to_string(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::kParse: return "ParseError";
    case ErrorCategory::kSchema: return "SchemaError";
    case ErrorCategory::kModel: return "ModelError";
    case ErrorCategory::kPrecondition: return "PreconditionError";
    case ErrorCategory::kInternal: return "InternalError";
  }
  return "Error";
}

namespace {

std::string format_message(ErrorCategory category, ErrorCode code,
                           const std::string& message,
                           const std::string& location) {
  std::string out{to_string(category)};
  out += '(';
  out += to_string(code);
  out += ')';
  if (!location.empty()) {
    out += " at ";
    out += location;
  }
  out += ": ";
  out += message;
  return out;
}

}  // namespace

Error::Error(ErrorCategory category, ErrorCode code, const std::string& message,
             std::string location)
    : std::runtime_error(format_message(category, code, message, location)),
      category_(category),
      code_(code),
      location_(std::move(location)) {}

}  // namespace heapabs
