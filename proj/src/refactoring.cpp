// Copyright 2026 The ChangePrism Authors
// SPDX-License-Identifier: Apache-2.0

#include "changeprism/refactoring.hpp"

#include <algorithm>
#include <set>
#include <tuple>

namespace changeprism {

using java::FieldDecl;
using java::MethodDecl;
using java::SyntaxTree;
using java::TypeDecl;

namespace names = refactoring_names;

std::optional<RefactoringLevel> builtin_refactoring_level(std::string_view name) {
  if (name == names::kMoveClass || name == names::kExtractSuperclass) return RefactoringLevel::Class;
  if (name == names::kAddMethodModifier) return RefactoringLevel::Method;
  if (name == names::kAddAttributeModifier || name == names::kRenameAttribute) {
    return RefactoringLevel::Statement;
  }
  return std::nullopt;
}

void RefactoringRegistry::add(RefactoringRule rule) { rules_.push_back(std::move(rule)); }

std::vector<Refactoring> RefactoringRegistry::detect(const RefactoringContext& context) const {
  std::vector<Refactoring> out;
  for (const auto& rule : rules_) {
    for (auto& finding : rule.detect(context)) {
      finding.name = rule.name;
      finding.level = rule.level;
      out.push_back(std::move(finding));
    }
  }
  return out;
}

namespace {

std::string qualified(const SyntaxTree& tree, const TypeDecl& type) {
  return tree.package_name.empty() ? type.name : tree.package_name + "." + type.name;
}

// Modifiers in post but not in pre, or empty unless post strictly contains pre.
std::vector<std::string> added_modifiers(const std::set<std::string>& pre,
                                         const std::set<std::string>& post) {
  if (post.size() <= pre.size() || !std::includes(post.begin(), post.end(), pre.begin(), pre.end())) {
    return {};
  }
  std::vector<std::string> added;
  std::set_difference(post.begin(), post.end(), pre.begin(), pre.end(), std::back_inserter(added));
  return added;
}

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& word : words) {
    if (!out.empty()) out += ' ';
    out += word;
  }
  return out;
}

std::vector<Refactoring> add_method_modifier(const RefactoringContext& ctx) {
  std::vector<Refactoring> out;
  for (const auto& pair : ctx.mapping.method_pairs) {
    const MethodDecl& a = ctx.pre.types[pair.pre_type].methods[pair.pre];
    const MethodDecl& b = ctx.post.types[pair.post_type].methods[pair.post];
    auto added = added_modifiers(a.modifiers, b.modifiers);
    if (added.empty()) continue;
    Refactoring r;
    r.pre_regions = {a.range};
    r.post_regions = {b.range};
    r.description = "Add Method Modifier " + join(added) + " in method " + java::method_signature(b) +
                    " from class " + qualified(ctx.post, ctx.post.types[pair.post_type]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Refactoring> add_attribute_modifier(const RefactoringContext& ctx) {
  std::vector<Refactoring> out;
  for (const auto& pair : ctx.mapping.field_pairs) {
    const FieldDecl& a = ctx.pre.types[pair.pre_type].fields[pair.pre];
    const FieldDecl& b = ctx.post.types[pair.post_type].fields[pair.post];
    auto added = added_modifiers(a.modifiers, b.modifiers);
    if (added.empty()) continue;
    Refactoring r;
    r.pre_regions = {a.range};
    r.post_regions = {b.range};
    r.description = "Add Attribute Modifier " + join(added) + " in attribute " + b.name +
                    " from class " + qualified(ctx.post, ctx.post.types[pair.post_type]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Refactoring> rename_attribute(const RefactoringContext& ctx) {
  std::vector<Refactoring> out;
  for (const auto& pair : ctx.mapping.field_pairs) {
    if (!pair.by_fallback) continue;
    const FieldDecl& a = ctx.pre.types[pair.pre_type].fields[pair.pre];
    const FieldDecl& b = ctx.post.types[pair.post_type].fields[pair.post];
    if (a.name == b.name) continue;
    Refactoring r;
    r.pre_regions = {a.range};
    r.post_regions = {b.range};
    r.description = "Rename Attribute " + a.name + " to " + b.name + " in class " +
                    qualified(ctx.post, ctx.post.types[pair.post_type]);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<Refactoring> move_class(const RefactoringContext& ctx) {
  std::vector<Refactoring> out;
  const bool path_changed =
      ctx.file.path_pre && ctx.file.path_post && *ctx.file.path_pre != *ctx.file.path_post;
  const bool package_changed = ctx.pre.package_name != ctx.post.package_name;
  if (!path_changed && !package_changed) return out;
  for (const auto& pair : ctx.mapping.type_pairs) {
    const TypeDecl& a = ctx.pre.types[pair.pre];
    const TypeDecl& b = ctx.post.types[pair.post];
    if (a.is_nested() || b.is_nested() || a.name != b.name) continue;
    Refactoring r;
    r.pre_regions = {a.range};
    r.post_regions = {b.range};
    r.description = "Move Class " + qualified(ctx.pre, a) + " moved to " + qualified(ctx.post, b);
    out.push_back(std::move(r));
  }
  return out;
}

// At least one member of the old subclass reappears in the new superclass,
// by name or by method body similarity.
bool shares_member(const TypeDecl& subclass, const TypeDecl& superclass) {
  for (const auto& field : subclass.fields) {
    for (const auto& candidate : superclass.fields) {
      if (field.name == candidate.name) return true;
    }
  }
  for (const auto& method : subclass.methods) {
    for (const auto& candidate : superclass.methods) {
      if (method.name == candidate.name ||
          dice_similarity(method.body_tokens, candidate.body_tokens) >= kSimilarityThreshold) {
        return true;
      }
    }
  }
  return false;
}

// Post types whose extends clause changed, with the new superclass name.
std::vector<std::tuple<std::size_t, std::size_t, std::string>> retargeted_subclasses(
    const DeclarationMapping& mapping, const SyntaxTree& pre, const SyntaxTree& post) {
  std::vector<std::tuple<std::size_t, std::size_t, std::string>> out;
  for (const auto& pair : mapping.type_pairs) {
    const auto& after = post.types[pair.post].extends_name;
    if (after && after != pre.types[pair.pre].extends_name) out.emplace_back(pair.pre, pair.post, *after);
  }
  return out;
}

std::vector<std::size_t> new_types_named(const DeclarationMapping& mapping, const SyntaxTree& post,
                                         const std::string& simple_name) {
  std::vector<std::size_t> out;
  for (const auto& ref : mapping.unmatched_post) {
    if (ref.kind == DeclKind::Type && post.types[ref.type].simple_name() == simple_name) {
      out.push_back(ref.type);
    }
  }
  return out;
}

Refactoring extract_superclass_finding(const SyntaxTree& pre, const TypeDecl& subclass,
                                       const SyntaxTree& post, const TypeDecl& superclass) {
  Refactoring r;
  r.name = std::string(names::kExtractSuperclass);
  r.level = RefactoringLevel::Class;
  r.pre_regions = {subclass.range};
  r.post_regions = {superclass.range};
  r.description = "Extract Superclass " + qualified(post, superclass) + " from class " +
                  qualified(pre, subclass);
  return r;
}

std::vector<Refactoring> extract_superclass(const RefactoringContext& ctx) {
  std::vector<Refactoring> out;
  for (const auto& [pre_index, post_index, superclass] :
       retargeted_subclasses(ctx.mapping, ctx.pre, ctx.post)) {
    for (auto t : new_types_named(ctx.mapping, ctx.post, superclass)) {
      if (shares_member(ctx.pre.types[pre_index], ctx.post.types[t])) {
        out.push_back(
            extract_superclass_finding(ctx.pre, ctx.pre.types[pre_index], ctx.post, ctx.post.types[t]));
        break;
      }
    }
  }
  return out;
}

RefactoringRegistry make_builtin() {
  RefactoringRegistry registry;
  registry.add({std::string(names::kAddMethodModifier), RefactoringLevel::Method, add_method_modifier});
  registry.add(
      {std::string(names::kAddAttributeModifier), RefactoringLevel::Statement, add_attribute_modifier});
  registry.add({std::string(names::kRenameAttribute), RefactoringLevel::Statement, rename_attribute});
  registry.add({std::string(names::kMoveClass), RefactoringLevel::Class, move_class});
  registry.add({std::string(names::kExtractSuperclass), RefactoringLevel::Class, extract_superclass});
  return registry;
}

}  // namespace

const RefactoringRegistry& RefactoringRegistry::builtin() {
  static const RefactoringRegistry registry = make_builtin();
  return registry;
}

std::vector<Refactoring> detect_refactorings(const DeclarationMapping& mapping, const SyntaxTree& pre,
                                             const SyntaxTree& post, const FileChange& file_change) {
  return RefactoringRegistry::builtin().detect({mapping, pre, post, file_change});
}

std::vector<LocatedRefactoring> detect_cross_file_refactorings(std::span<const ParsedFile> files) {
  std::vector<LocatedRefactoring> out;
  auto usable = [](const ParsedFile& f) { return f.change && f.pre && f.post && f.mapping; };

  // Move Class: top-level types of deleted files reappearing, under the same
  // simple name and with similar bodies, in added files.
  struct MoveCandidate {
    double score;
    std::size_t pre_file, pre_type, post_file, post_type;
  };
  std::vector<MoveCandidate> moves;
  for (std::size_t f = 0; f < files.size(); ++f) {
    if (!usable(files[f]) || files[f].change->status != FileStatus::Deleted) continue;
    for (std::size_t g = 0; g < files.size(); ++g) {
      if (!usable(files[g]) || files[g].change->status != FileStatus::Added) continue;
      const auto& pre_types = files[f].pre->types;
      const auto& post_types = files[g].post->types;
      for (std::size_t i = 0; i < pre_types.size(); ++i) {
        for (std::size_t j = 0; j < post_types.size(); ++j) {
          if (pre_types[i].is_nested() || post_types[j].is_nested() ||
              pre_types[i].name != post_types[j].name) {
            continue;
          }
          double score = dice_similarity(pre_types[i].body_tokens, post_types[j].body_tokens);
          if (score >= kSimilarityThreshold) moves.push_back({score, f, i, g, j});
        }
      }
    }
  }
  std::sort(moves.begin(), moves.end(), [](const MoveCandidate& a, const MoveCandidate& b) {
    if (a.score != b.score) return a.score > b.score;
    return std::tie(a.pre_file, a.pre_type, a.post_file, a.post_type) <
           std::tie(b.pre_file, b.pre_type, b.post_file, b.post_type);
  });
  std::set<std::pair<std::size_t, std::size_t>> pre_taken, post_taken;
  for (const auto& m : moves) {
    if (!pre_taken.insert({m.pre_file, m.pre_type}).second) continue;
    if (!post_taken.insert({m.post_file, m.post_type}).second) {
      pre_taken.erase({m.pre_file, m.pre_type});
      continue;
    }
    const auto& pre_tree = *files[m.pre_file].pre;
    const auto& post_tree = *files[m.post_file].post;
    const auto& a = pre_tree.types[m.pre_type];
    const auto& b = post_tree.types[m.post_type];
    Refactoring r;
    r.name = std::string(names::kMoveClass);
    r.level = RefactoringLevel::Class;
    r.pre_regions = {a.range};
    r.post_regions = {b.range};
    r.description = "Move Class " + qualified(pre_tree, a) + " moved to " + qualified(post_tree, b);
    out.push_back({std::move(r), m.pre_file, m.post_file});
  }

  // Extract Superclass where the new superclass is declared in another file.
  for (std::size_t f = 0; f < files.size(); ++f) {
    if (!usable(files[f])) continue;
    const auto& file = files[f];
    for (const auto& [pre_index, post_index, superclass] :
         retargeted_subclasses(*file.mapping, *file.pre, *file.post)) {
      if (!new_types_named(*file.mapping, *file.post, superclass).empty()) continue;
      bool found = false;
      for (std::size_t g = 0; g < files.size() && !found; ++g) {
        if (g == f || !usable(files[g])) continue;
        for (auto t : new_types_named(*files[g].mapping, *files[g].post, superclass)) {
          if (shares_member(file.pre->types[pre_index], files[g].post->types[t])) {
            out.push_back({extract_superclass_finding(*file.pre, file.pre->types[pre_index],
                                                      *files[g].post, files[g].post->types[t]),
                           f, g});
            found = true;
            break;
          }
        }
      }
    }
  }
  return out;
}

}  // namespace changeprism
