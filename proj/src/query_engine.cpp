#include "ontosearch/query_engine.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "ontosearch/error.hpp"

namespace ontosearch {

namespace {

std::string join_names(const std::vector<Name>& names, std::string_view sep) {
  std::string out;
  for (const Name& n : names) {
    if (!out.empty()) out += sep;
    out += n.text();
  }
  return out;
}

ExplanationTrace make_trace(std::vector<Name> domain_chain, std::vector<Name> range_chain,
                            const PropertyMatch& m) {
  Name matched_domain = domain_chain.at(m.domain_level);
  Name matched_range = range_chain.at(m.range_level);
  return {std::move(domain_chain), std::move(range_chain), m.levels_walked(),
          m.domain_level,          m.range_level,          std::move(matched_domain),
          std::move(matched_range)};
}

bool has_results(const Answer& a) {
  return std::any_of(a.groups.begin(), a.groups.end(),
                     [](const ResultGroup& g) { return !g.results.empty(); });
}

bool refers_to(const Value& v, const Name& instance) {
  if (const auto* ref = std::get_if<ResourceRef>(&v)) return ref->target == instance;
  return fold_case(std::get<Literal>(v).text) == instance.key();
}

}  // namespace

const std::vector<std::string_view>& stop_words() {
  // Sorted; connective words in the example queries.
  static const std::vector<std::string_view> words = {
      "a", "an", "are", "do", "does", "for", "how", "in", "is", "much", "need", "needed",
      "needs", "of", "require", "required", "requires", "the", "to", "what", "when", "where",
      "which",
  };
  return words;
}

bool is_stop_word(std::string_view token) {
  const auto& w = stop_words();
  return std::find(w.begin(), w.end(), token) != w.end();
}

std::string_view mode_name(QueryMode mode) {
  return mode == QueryMode::Forward ? "forward" : "inverse";
}

Extraction extract(const Lexicon& lexicon, std::string_view query) {
  const std::vector<std::string> tokens = tokenize(query);
  Extraction out;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    if (is_stop_word(tokens[pos])) {
      ++pos;
      continue;
    }
    std::optional<Mention> best;
    const std::size_t longest = std::min(kMaxSurfaceWords, tokens.size() - pos);
    for (std::size_t len = longest; len >= 1 && !best; --len) {
      std::string phrase = tokens[pos];
      for (std::size_t k = 1; k < len; ++k) phrase += ' ' + tokens[pos + k];
      if (auto inst = lookup(lexicon.instances, phrase)) {
        best = Mention{MentionKind::Instance, *inst, pos, pos + len};
      } else if (auto cls = lookup(lexicon.classes, phrase)) {
        best = Mention{MentionKind::Class, *cls, pos, pos + len};
      }
    }
    if (best) {
      pos = best->end_token;
      out.mentions.push_back(std::move(*best));
    } else {
      out.dropped.push_back(tokens[pos]);
      ++pos;
    }
  }
  return out;
}

std::vector<std::string> Answer::result_texts() const {
  std::vector<std::string> out;
  for (const ResultGroup& g : groups) {
    for (const Value& v : g.results) out.push_back(value_text(v));
  }
  return out;
}

std::optional<Answer> forward_answer(const KnowledgeBase& kb, const Name& instance,
                                     const Name& cls) {
  auto domain_chain = ancestors(kb, class_of(kb, instance));
  auto range_chain = ancestors(kb, cls);
  auto match = find_property(kb, domain_chain, range_chain);
  if (!match) return std::nullopt;
  Answer answer{QueryMode::Forward, {}, make_trace(domain_chain, range_chain, *match)};
  for (const PropertyDef& p : match->properties) {
    answer.groups.push_back({p.name, value_of(kb, instance, p.name)});
  }
  return answer;
}

std::optional<Answer> inverse_answer(const KnowledgeBase& kb, const Name& instance,
                                     const Name& cls) {
  auto domain_chain = ancestors(kb, cls);
  auto range_chain = ancestors(kb, class_of(kb, instance));
  auto match = find_property(kb, domain_chain, range_chain);
  if (!match) return std::nullopt;
  Answer answer{QueryMode::Inverse, {}, make_trace(domain_chain, range_chain, *match)};
  const auto candidates = subtree_instances(kb, cls);
  for (const PropertyDef& p : match->properties) {
    ResultGroup group{p.name, {}};
    for (const Name& subject : candidates) {
      auto values = value_of(kb, subject, p.name);
      if (std::any_of(values.begin(), values.end(),
                      [&](const Value& v) { return refers_to(v, instance); })) {
        group.results.push_back(ResourceRef{subject});
      }
    }
    answer.groups.push_back(std::move(group));
  }
  return answer;
}

Answer resolve(const KnowledgeBase& kb, const Extraction& extraction) {
  std::vector<const Mention*> classes, instances;
  for (const Mention& m : extraction.mentions) {
    (m.kind == MentionKind::Class ? classes : instances).push_back(&m);
  }
  if (classes.size() != 1 || instances.size() != 1) {
    auto names = [](const std::vector<const Mention*>& ms) {
      std::string out;
      for (const Mention* m : ms) out += (out.empty() ? "" : ", ") + m->name.text();
      return ms.empty() ? std::string() : " (" + out + ")";
    };
    throw Error(ErrorCode::MalformedQuery,
                "a query needs exactly one class and one instance; found " +
                    std::to_string(classes.size()) + " class mention(s)" + names(classes) +
                    " and " + std::to_string(instances.size()) + " instance mention(s)" +
                    names(instances));
  }
  const Mention& cls = *classes.front();
  const Mention& inst = *instances.front();

  auto forward = forward_answer(kb, inst.name, cls.name);
  if (forward && has_results(*forward)) return *std::move(forward);

  std::optional<Answer> inverse;
  const bool inverse_tried = inst.first_token < cls.first_token;
  if (inverse_tried) {
    inverse = inverse_answer(kb, inst.name, cls.name);
    if (inverse && has_results(*inverse)) return *std::move(inverse);
  }

  if (forward || inverse) {
    const Answer& found = forward ? *forward : *inverse;
    std::string props;
    for (const ResultGroup& g : found.groups) props += (props.empty() ? "" : ", ") + g.property.text();
    throw Error(ErrorCode::EmptyResult, "property " + props + " relates " + inst.name.text() +
                                            " and " + cls.name.text() +
                                            " but no values are recorded");
  }
  const std::string instance_chain = join_names(ancestors(kb, class_of(kb, inst.name)), " > ");
  const std::string class_chain = join_names(ancestors(kb, cls.name), " > ");
  std::string message = "no property has a domain in [" + instance_chain + "] and a range in [" +
                        class_chain + "]";
  if (inverse_tried) {
    message += ", nor a domain in [" + class_chain + "] and a range in [" + instance_chain + "]";
  }
  throw Error(ErrorCode::NoRelation, message);
}

Answer answer_query(const KnowledgeBase& kb, const Lexicon& lexicon, std::string_view query) {
  return resolve(kb, extract(lexicon, query));
}

SearchIndex load_search_index(const std::filesystem::path& dir) {
  KnowledgeBase kb = load_knowledge_base(dir);
  std::vector<SynonymRow> rows;
  const auto csv = dir / "synonyms.csv";
  if (std::filesystem::exists(csv)) {
    std::ifstream in(csv, std::ios::binary);
    if (!in) throw Error(ErrorCode::IoError, "cannot read " + csv.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    rows = read_synonyms_csv(ss.str(), "synonyms.csv");
  }
  Lexicon lexicon = build_tables(kb, rows);
  return {std::move(kb), std::move(lexicon)};
}

}  // namespace ontosearch
