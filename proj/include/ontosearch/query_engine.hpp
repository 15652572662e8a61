#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ontosearch/knowledge_base.hpp"
#include "ontosearch/lexicon.hpp"

namespace ontosearch {

/// Connective words skipped by the extractor.
const std::vector<std::string_view>& stop_words();
bool is_stop_word(std::string_view token);

struct Mention {
  MentionKind kind;
  Name name;
  std::size_t first_token;  // token range [first_token, end_token)
  std::size_t end_token;

  friend bool operator==(const Mention&, const Mention&) = default;
};

struct Extraction {
  std::vector<Mention> mentions;     // ordered by first_token, non-overlapping
  std::vector<std::string> dropped;  // unmatched non-stop-word tokens

  friend bool operator==(const Extraction&, const Extraction&) = default;
};

/// Spots class and instance mentions in a free-text query.
///
/// Tokens are scanned left to right. At each position that does not hold a
/// stop word, the longest phrase of up to kMaxSurfaceWords tokens found in
/// either table wins, the instance table taking precedence at equal length.
/// Stop words may appear inside a multi-word phrase but never start one.
Extraction extract(const Lexicon& lexicon, std::string_view query);

enum class QueryMode { Forward, Inverse };

std::string_view mode_name(QueryMode mode);

struct ExplanationTrace {
  std::vector<Name> domain_chain_used;
  std::vector<Name> range_chain_used;
  std::size_t levels_walked;
  std::size_t domain_level;
  std::size_t range_level;
  Name matched_domain;
  Name matched_range;

  friend bool operator==(const ExplanationTrace&, const ExplanationTrace&) = default;
};

/// Values one property produced. Inverse answers hold ResourceRefs to the
/// matching subject instances.
struct ResultGroup {
  Name property;
  std::vector<Value> results;

  friend bool operator==(const ResultGroup&, const ResultGroup&) = default;
};

struct Answer {
  QueryMode mode;
  std::vector<ResultGroup> groups;  // one per matching property, by name
  ExplanationTrace trace;

  /// The first (usually only) matching property.
  const Name& property() const { return groups.front().property; }

  /// Result values of every group, flattened, as display text.
  std::vector<std::string> result_texts() const;

  friend bool operator==(const Answer&, const Answer&) = default;
};

/// value_of(instance, P) for the property P relating the instance's class
/// chain (domain side) to the class chain (range side). std::nullopt when no
/// property relates the chains; groups may be empty-valued.
std::optional<Answer> forward_answer(const KnowledgeBase& kb, const Name& instance,
                                     const Name& cls);

/// Instances X below `cls` with `instance` among value_of(X, P), for the
/// property P relating the class chain (domain side) to the instance's class
/// chain (range side). A Literal matches when its text equals the instance
/// name case-insensitively.
std::optional<Answer> inverse_answer(const KnowledgeBase& kb, const Name& instance,
                                     const Name& cls);

/// Relates one class mention and one instance mention.
///
/// Forward resolution is tried first. When it finds no property or only empty
/// values, inverse resolution is tried, but only if the instance is mentioned
/// before the class ("K123 required for which crops"); a query naming the
/// class first reads as asking about the instance's own properties.
///
/// Throws Error: MalformedQuery unless there is exactly one mention of each
/// kind, NoRelation when no property relates the two, EmptyResult when a
/// property was found but produced nothing.
Answer resolve(const KnowledgeBase& kb, const Extraction& extraction);

Answer answer_query(const KnowledgeBase& kb, const Lexicon& lexicon, std::string_view query);

/// A knowledge base together with its synonym tables.
struct SearchIndex {
  KnowledgeBase kb;
  Lexicon lexicon;
};

/// Loads `*.rdf` files and the optional `synonyms.csv` from `dir`.
SearchIndex load_search_index(const std::filesystem::path& dir);

}  // namespace ontosearch
