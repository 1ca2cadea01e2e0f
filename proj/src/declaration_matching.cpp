// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/declaration_matching.hpp"

#include <algorithm>
#include <map>
#include <tuple>
#include <unordered_map>

namespace changeprism {

using java::FieldDecl;
using java::MethodDecl;
using java::SyntaxTree;
using java::TypeDecl;

double dice_similarity(std::span<const std::string> a, std::span<const std::string> b) {
  if (a.empty() && b.empty()) return 0.0;
  std::unordered_map<std::string_view, int> counts;
  for (const auto& token : a) ++counts[token];
  std::size_t common = 0;
  for (const auto& token : b) {
    auto it = counts.find(token);
    if (it != counts.end() && it->second > 0) {
      --it->second;
      ++common;
    }
  }
  return 2.0 * static_cast<double>(common) / static_cast<double>(a.size() + b.size());
}

std::optional<std::size_t> DeclarationMapping::post_type_for(std::size_t pre_type) const {
  for (const auto& pair : type_pairs) {
    if (pair.pre == pre_type) return pair.post;
  }
  return std::nullopt;
}

std::optional<std::size_t> DeclarationMapping::pre_type_for(std::size_t post_type) const {
  for (const auto& pair : type_pairs) {
    if (pair.post == post_type) return pair.pre;
  }
  return std::nullopt;
}

const MemberPair* DeclarationMapping::method_pair_for_post(std::size_t post_type,
                                                           std::size_t post_method) const {
  for (const auto& pair : method_pairs) {
    if (pair.post_type == post_type && pair.post == post_method) return &pair;
  }
  return nullptr;
}

namespace {

struct Candidate {
  double score;
  std::string pre_name;
  std::string post_name;
  std::size_t pre;
  std::size_t post;
};

// Greedy assignment: highest score first, ties by names then position.
template <class Accept>
void greedy_assign(std::vector<Candidate> candidates, Accept accept) {
  std::sort(candidates.begin(), candidates.end(), [](const Candidate& a, const Candidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.pre_name, a.post_name, a.pre, a.post) <
           std::tie(b.pre_name, b.post_name, b.pre, b.post);
  });
  for (const auto& candidate : candidates) accept(candidate);
}

void match_methods(const TypeDecl& pre, std::size_t pre_type, const TypeDecl& post,
                   std::size_t post_type, DeclarationMapping& mapping) {
  std::vector<bool> pre_used(pre.methods.size(), false);
  std::vector<bool> post_used(post.methods.size(), false);

  std::map<std::pair<std::string, std::vector<std::string>>, std::size_t> post_by_key;
  for (std::size_t j = 0; j < post.methods.size(); ++j) {
    post_by_key.try_emplace({post.methods[j].name, post.methods[j].parameter_types}, j);
  }
  for (std::size_t i = 0; i < pre.methods.size(); ++i) {
    auto it = post_by_key.find({pre.methods[i].name, pre.methods[i].parameter_types});
    if (it == post_by_key.end() || post_used[it->second]) continue;
    pre_used[i] = post_used[it->second] = true;
    mapping.method_pairs.push_back({pre_type, i, post_type, it->second, false});
  }

  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < pre.methods.size(); ++i) {
    if (pre_used[i]) continue;
    for (std::size_t j = 0; j < post.methods.size(); ++j) {
      if (post_used[j]) continue;
      double score = dice_similarity(pre.methods[i].body_tokens, post.methods[j].body_tokens);
      if (score >= kSimilarityThreshold) {
        candidates.push_back({score, java::method_signature(pre.methods[i]),
                              java::method_signature(post.methods[j]), i, j});
      }
    }
  }
  greedy_assign(std::move(candidates), [&](const Candidate& c) {
    if (pre_used[c.pre] || post_used[c.post]) return;
    pre_used[c.pre] = post_used[c.post] = true;
    mapping.method_pairs.push_back({pre_type, c.pre, post_type, c.post, true});
  });

  for (std::size_t i = 0; i < pre.methods.size(); ++i) {
    if (!pre_used[i]) mapping.unmatched_pre.push_back({DeclKind::Method, pre_type, i});
  }
  for (std::size_t j = 0; j < post.methods.size(); ++j) {
    if (!post_used[j]) mapping.unmatched_post.push_back({DeclKind::Method, post_type, j});
  }
}

void match_fields(const TypeDecl& pre, std::size_t pre_type, const TypeDecl& post,
                  std::size_t post_type, DeclarationMapping& mapping) {
  std::vector<bool> pre_used(pre.fields.size(), false);
  std::vector<bool> post_used(post.fields.size(), false);

  for (std::size_t i = 0; i < pre.fields.size(); ++i) {
    for (std::size_t j = 0; j < post.fields.size(); ++j) {
      if (!post_used[j] && pre.fields[i].name == post.fields[j].name) {
        pre_used[i] = post_used[j] = true;
        mapping.field_pairs.push_back({pre_type, i, post_type, j, false});
        break;
      }
    }
  }
  for (std::size_t i = 0; i < pre.fields.size(); ++i) {
    if (pre_used[i]) continue;
    for (std::size_t j = 0; j < post.fields.size(); ++j) {
      if (post_used[j]) continue;
      const FieldDecl& a = pre.fields[i];
      const FieldDecl& b = post.fields[j];
      if (a.declared_type == b.declared_type && a.initializer_tokens == b.initializer_tokens) {
        pre_used[i] = post_used[j] = true;
        mapping.field_pairs.push_back({pre_type, i, post_type, j, true});
        break;
      }
    }
  }

  for (std::size_t i = 0; i < pre.fields.size(); ++i) {
    if (!pre_used[i]) mapping.unmatched_pre.push_back({DeclKind::Field, pre_type, i});
  }
  for (std::size_t j = 0; j < post.fields.size(); ++j) {
    if (!post_used[j]) mapping.unmatched_post.push_back({DeclKind::Field, post_type, j});
  }
}

}  // namespace

DeclarationMapping match_declarations(const SyntaxTree& pre, const SyntaxTree& post) {
  DeclarationMapping mapping;
  std::vector<bool> pre_used(pre.types.size(), false);
  std::vector<bool> post_used(post.types.size(), false);

  std::unordered_map<std::string_view, std::size_t> post_by_name;
  for (std::size_t j = 0; j < post.types.size(); ++j) post_by_name.try_emplace(post.types[j].name, j);
  for (std::size_t i = 0; i < pre.types.size(); ++i) {
    auto it = post_by_name.find(pre.types[i].name);
    if (it == post_by_name.end() || post_used[it->second]) continue;
    pre_used[i] = post_used[it->second] = true;
    mapping.type_pairs.push_back({i, it->second, false});
  }

  std::vector<Candidate> candidates;
  for (std::size_t i = 0; i < pre.types.size(); ++i) {
    if (pre_used[i]) continue;
    for (std::size_t j = 0; j < post.types.size(); ++j) {
      if (post_used[j]) continue;
      double score = dice_similarity(pre.types[i].body_tokens, post.types[j].body_tokens);
      if (score >= kSimilarityThreshold) {
        candidates.push_back({score, pre.types[i].name, post.types[j].name, i, j});
      }
    }
  }
  greedy_assign(std::move(candidates), [&](const Candidate& c) {
    if (pre_used[c.pre] || post_used[c.post]) return;
    pre_used[c.pre] = post_used[c.post] = true;
    mapping.type_pairs.push_back({c.pre, c.post, true});
  });
  std::sort(mapping.type_pairs.begin(), mapping.type_pairs.end(),
            [](const TypePair& a, const TypePair& b) { return a.pre < b.pre; });

  for (std::size_t i = 0; i < pre.types.size(); ++i) {
    if (!pre_used[i]) mapping.unmatched_pre.push_back({DeclKind::Type, i, 0});
  }
  for (std::size_t j = 0; j < post.types.size(); ++j) {
    if (!post_used[j]) mapping.unmatched_post.push_back({DeclKind::Type, j, 0});
  }

  for (const auto& pair : mapping.type_pairs) {
    match_fields(pre.types[pair.pre], pair.pre, post.types[pair.post], pair.post, mapping);
    match_methods(pre.types[pair.pre], pair.pre, post.types[pair.post], pair.post, mapping);
  }
  return mapping;
}

}  // namespace changeprism
