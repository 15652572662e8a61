#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontosearch/knowledge_base.hpp"

namespace ontosearch {

enum class MentionKind { Class, Instance };

std::string_view kind_name(MentionKind kind);

/// Longest surface phrase, in words.
inline constexpr std::size_t kMaxSurfaceWords = 4;

/// Splits on anything that cannot appear in a name (whitespace, punctuation)
/// and lowercases. Bytes >= 0x80 stay inside tokens so UTF-8 text never splits
/// mid-character.
std::vector<std::string> tokenize(std::string_view text);

/// Surface phrase -> canonical name, for one kind of entity.
class SynonymTable {
public:
  explicit SynonymTable(MentionKind kind) : kind_(kind) {}

  MentionKind kind() const noexcept { return kind_; }

  /// Normalized (lowercase, single-spaced) surface -> canonical name.
  const std::map<std::string, Name>& entries() const noexcept { return entries_; }

  /// Throws ConflictingSynonym when `surface` already maps elsewhere.
  void add(const Name& canonical, const std::string& surface);

  friend bool operator==(const SynonymTable&, const SynonymTable&) = default;

private:
  MentionKind kind_;
  std::map<std::string, Name> entries_;
};

/// Case-insensitive exact phrase match after whitespace normalization.
std::optional<Name> lookup(const SynonymTable& table, std::string_view phrase);

struct SynonymRow {
  MentionKind kind;
  std::string canonical;
  std::string surface;
};

struct Lexicon {
  SynonymTable classes{MentionKind::Class};
  SynonymTable instances{MentionKind::Instance};

  friend bool operator==(const Lexicon&, const Lexicon&) = default;
};

/// Seeds one identity row per KB class and instance, then adds `extra_rows`.
/// Throws Error with UnknownCanonical, ConflictingSynonym or InvalidSynonym.
Lexicon build_tables(const KnowledgeBase& kb, const std::vector<SynonymRow>& extra_rows);

/// Parses `kind,canonical,surface` CSV (header required, `#` comments and
/// blank lines skipped). Throws InvalidSynonym with the offending line.
std::vector<SynonymRow> read_synonyms_csv(std::string_view text, std::string_view doc_id);

}  // namespace ontosearch
