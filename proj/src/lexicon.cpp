#include "ontosearch/lexicon.hpp"

#include <sstream>

#include "ontosearch/error.hpp"

namespace ontosearch {

namespace {

bool is_token_byte(char c) { return is_name_char(c) || static_cast<unsigned char>(c) >= 0x80; }

std::string normalize_spaces(std::string_view phrase) {
  std::string out;
  std::istringstream words{std::string(phrase)};
  std::string w;
  while (words >> w) {
    if (!out.empty()) out += ' ';
    out += w;
  }
  return fold_case(out);
}

std::string trim(std::string_view s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

}  // namespace

std::string_view kind_name(MentionKind kind) {
  return kind == MentionKind::Class ? "class" : "instance";
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char c : text) {
    if (is_token_byte(c)) {
      cur += c;
    } else if (!cur.empty()) {
      tokens.push_back(fold_case(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) tokens.push_back(fold_case(cur));
  return tokens;
}

void SynonymTable::add(const Name& canonical, const std::string& surface) {
  auto [it, inserted] = entries_.try_emplace(surface, canonical);
  if (!inserted && !(it->second == canonical)) {
    // Name the two canonicals in a stable order.
    const Name& a = std::min(it->second, canonical);
    const Name& b = std::max(it->second, canonical);
    throw Error(ErrorCode::ConflictingSynonym, std::string(kind_name(kind_)) + " synonym '" +
                                                   surface + "' maps to both '" + a.text() +
                                                   "' and '" + b.text() + "'");
  }
}

std::optional<Name> lookup(const SynonymTable& table, std::string_view phrase) {
  auto it = table.entries().find(normalize_spaces(phrase));
  if (it == table.entries().end()) return std::nullopt;
  return it->second;
}

Lexicon build_tables(const KnowledgeBase& kb, const std::vector<SynonymRow>& extra_rows) {
  Lexicon lex;
  for (const auto& [name, node] : kb.classes()) lex.classes.add(node.name, name.key());
  for (const auto& [name, rec] : kb.instances()) lex.instances.add(rec.id, name.key());

  for (const SynonymRow& row : extra_rows) {
    const std::string kind(kind_name(row.kind));
    auto canonical_key = Name::parse(trim(row.canonical));
    const Name* canonical = nullptr;
    if (canonical_key) {
      if (row.kind == MentionKind::Class) {
        if (const ClassNode* c = kb.find_class(*canonical_key)) canonical = &c->name;
      } else if (const InstanceRecord* i = kb.find_instance(*canonical_key)) {
        canonical = &i->id;
      }
    }
    if (!canonical) {
      throw Error(ErrorCode::UnknownCanonical,
                  "synonym '" + row.surface + "' refers to unknown " + kind + " '" +
                      row.canonical + "'");
    }

    std::string surface = normalize_spaces(row.surface);
    auto words = tokenize(surface);
    std::string rejoined;
    for (const auto& w : words) rejoined += (rejoined.empty() ? "" : " ") + w;
    if (words.empty() || words.size() > kMaxSurfaceWords || rejoined != surface) {
      throw Error(ErrorCode::InvalidSynonym,
                  "synonym '" + row.surface + "' for " + kind + " '" + row.canonical +
                      "' must be 1.." + std::to_string(kMaxSurfaceWords) +
                      " words of letters, digits, '_' or '-'");
    }
    (row.kind == MentionKind::Class ? lex.classes : lex.instances).add(*canonical, surface);
  }
  return lex;
}

std::vector<SynonymRow> read_synonyms_csv(std::string_view text, std::string_view doc_id) {
  std::vector<SynonymRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  bool header_seen = false;
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::InvalidSynonym,
                std::string(doc_id) + ":" + std::to_string(line_no) + ": " + why);
  };
  while (std::getline(in, line)) {
    ++line_no;
    std::string content = trim(line);
    if (content.empty() || content.front() == '#') continue;

    std::vector<std::string> fields;
    std::size_t start = 0;
    while (true) {
      auto comma = content.find(',', start);
      fields.push_back(trim(content.substr(start, comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (fields.size() != 3) fail("expected 3 fields, got " + std::to_string(fields.size()));

    if (!header_seen) {
      if (fold_case(fields[0]) != "kind" || fold_case(fields[1]) != "canonical" ||
          fold_case(fields[2]) != "surface") {
        fail("missing header 'kind,canonical,surface'");
      }
      header_seen = true;
      continue;
    }
    std::string kind = fold_case(fields[0]);
    if (kind != "class" && kind != "instance") fail("kind must be 'class' or 'instance'");
    rows.push_back({kind == "class" ? MentionKind::Class : MentionKind::Instance, fields[1],
                    fields[2]});
  }
  return rows;
}

}  // namespace ontosearch
