// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "changeprism/java_syntax.hpp"

namespace changeprism {

inline constexpr double kSimilarityThreshold = 0.5;

/// Dice coefficient over token multisets: 2|A∩B| / (|A| + |B|). Two empty
/// multisets score 0 so that empty bodies never match by similarity alone.
double dice_similarity(std::span<const std::string> a, std::span<const std::string> b);

enum class DeclKind { Type, Field, Method };

/// Index of a declaration inside a SyntaxTree. member is unused for types.
struct DeclRef {
  DeclKind kind = DeclKind::Type;
  std::size_t type = 0;
  std::size_t member = 0;

  friend bool operator==(const DeclRef&, const DeclRef&) = default;
};

struct TypePair {
  std::size_t pre = 0;
  std::size_t post = 0;
  bool by_similarity = false;

  friend bool operator==(const TypePair&, const TypePair&) = default;
};

struct MemberPair {
  std::size_t pre_type = 0;
  std::size_t pre = 0;
  std::size_t post_type = 0;
  std::size_t post = 0;
  /// Formed by the secondary rule (body similarity for methods, type and
  /// initializer equality for fields) rather than by name.
  bool by_fallback = false;

  friend bool operator==(const MemberPair&, const MemberPair&) = default;
};

struct DeclarationMapping {
  std::vector<TypePair> type_pairs;
  std::vector<MemberPair> field_pairs;
  std::vector<MemberPair> method_pairs;
  std::vector<DeclRef> unmatched_pre;
  std::vector<DeclRef> unmatched_post;

  std::optional<std::size_t> post_type_for(std::size_t pre_type) const;
  std::optional<std::size_t> pre_type_for(std::size_t post_type) const;
  const MemberPair* method_pair_for_post(std::size_t post_type, std::size_t post_method) const;

  friend bool operator==(const DeclarationMapping&, const DeclarationMapping&) = default;
};

/// Pairs declarations of two versions of one file.
///  - types by name, then greedily by body-token similarity >= 0.5;
///  - methods by (name, parameter types), then by body similarity within
///    the matched type;
///  - fields by name, then by equal (declared type, initializer tokens).
/// Members of unmatched types are not listed separately; the type stands
/// for them.
DeclarationMapping match_declarations(const java::SyntaxTree& pre, const java::SyntaxTree& post);

}  // namespace changeprism
