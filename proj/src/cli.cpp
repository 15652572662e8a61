#include "ontosearch/cli.hpp"

#include <CLI11.hpp>

#include <string>
#include <vector>

#include "ontosearch/json_codec.hpp"
#include "ontosearch/perf_model.hpp"
#include "ontosearch/query_engine.hpp"
#include "ontosearch/service.hpp"

namespace ontosearch {

namespace {

std::string chain_text(const std::vector<Name>& chain) {
  std::string out;
  for (const Name& n : chain) out += (out.empty() ? "" : " > ") + n.text();
  return out;
}

void print_answer(std::ostream& out, std::string_view query, const Answer& answer) {
  const ExplanationTrace& t = answer.trace;
  out << "query: " << query << "\n"
      << "mode: " << mode_name(answer.mode) << "\n";
  for (const ResultGroup& g : answer.groups) {
    out << "property: " << g.property << "\n"
        << "results:\n";
    for (const Value& v : g.results) out << "  " << value_text(v) << "\n";
  }
  out << "trace:\n"
      << "  domain chain: " << chain_text(t.domain_chain_used) << "\n"
      << "  range chain: " << chain_text(t.range_chain_used) << "\n"
      << "  matched domain: " << t.matched_domain << " (level " << t.domain_level << ")\n"
      << "  matched range: " << t.matched_range << " (level " << t.range_level << ")\n"
      << "  levels walked: " << t.levels_walked << "\n";
}

void print_error(std::ostream& err, const Error& e) {
  if (const auto* v = dynamic_cast<const ValidationError*>(&e)) {
    for (const Issue& issue : v->issues()) {
      err << "error: " << code_label(issue.code) << ": " << issue.message << "\n";
    }
    return;
  }
  err << "error: " << code_label(e.code()) << ": " << e.what() << "\n";
}

std::optional<SearchIndex> load_or_report(const std::string& dir, std::ostream& err) {
  try {
    return load_search_index(dir);
  } catch (const Error& e) {
    print_error(err, e);
    return std::nullopt;
  }
}

// Returns true on success.
bool run_one_query(const SearchIndex& index, const std::string& query, bool as_json,
                   std::ostream& out, std::ostream& err) {
  try {
    Extraction extraction = extract(index.lexicon, query);
    Answer answer = resolve(index.kb, extraction);
    if (as_json) {
      out << answer_json(query, extraction, answer).dump(2) << "\n";
    } else {
      print_answer(out, query, answer);
    }
    return true;
  } catch (const Error& e) {
    if (as_json) out << error_json(e).dump(2) << "\n";
    print_error(err, e);
    return false;
  }
}

std::string join_words(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : " ") + w;
  return out;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::istream& in, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Ontology-based search over an RDF knowledge base", "ontosearch"};
  app.require_subcommand(1);

  std::string kb_dir;
  bool as_json = false;

  auto* validate = app.add_subcommand("validate", "Load a KB directory and report its contents");
  validate->add_option("kb_dir", kb_dir, "Directory of .rdf files")->required();

  std::vector<std::string> query_words;
  auto* query = app.add_subcommand("query", "Answer one query");
  query->add_option("kb_dir", kb_dir, "Directory of .rdf files")->required();
  query->add_option("query", query_words, "Query text")->required();
  query->add_flag("--json", as_json, "Print the answer as JSON");

  auto* repl = app.add_subcommand("repl", "Answer queries read line by line from stdin");
  repl->add_option("kb_dir", kb_dir, "Directory of .rdf files")->required();
  repl->add_flag("--json", as_json, "Print answers as JSON");

  double r = 50, n_min = 10, n_max = 1e6;
  std::size_t steps = 6;
  auto* perf_cmd = app.add_subcommand("perf", "Write search-cost curves as CSV");
  perf_cmd->add_option("--r", r, "Branching factor")->capture_default_str();
  perf_cmd->add_option("--n-min", n_min, "Smallest page count")->capture_default_str();
  perf_cmd->add_option("--n-max", n_max, "Largest page count")->capture_default_str();
  perf_cmd->add_option("--steps", steps, "Number of rows")->capture_default_str();

  ServiceConfig service_config;
  std::string static_dir;
  auto* serve_cmd = app.add_subcommand("serve", "Run the JSON API");
  serve_cmd->add_option("kb_dir", kb_dir, "Directory of .rdf files")->required();
  serve_cmd->add_option("--bind", service_config.bind_address, "host:port")
      ->capture_default_str();
  serve_cmd->add_option("--static", static_dir, "Directory served at /");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  if (validate->parsed()) {
    auto index = load_or_report(kb_dir, err);
    if (!index) return kExitInvalidKb;
    const KnowledgeBase& kb = index->kb;
    out << "ok: " << kb.doc_count() << " documents, " << kb.classes().size() << " classes, "
        << kb.properties().size() << " properties, " << kb.instances().size() << " instances, "
        << kb.roots().size() << " roots, "
        << index->lexicon.classes.entries().size() + index->lexicon.instances.entries().size()
        << " lexicon entries\n";
    return kExitOk;
  }

  if (query->parsed()) {
    auto index = load_or_report(kb_dir, err);
    if (!index) return kExitInvalidKb;
    return run_one_query(*index, join_words(query_words), as_json, out, err) ? kExitOk
                                                                             : kExitQueryFailed;
  }

  if (repl->parsed()) {
    auto index = load_or_report(kb_dir, err);
    if (!index) return kExitInvalidKb;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      if (line == "quit" || line == "exit") break;
      run_one_query(*index, line, as_json, out, err);
      out << "\n" << std::flush;
    }
    return kExitOk;
  }

  if (perf_cmd->parsed()) {
    try {
      perf::write_csv(out, perf::emit_curves(n_min, n_max, steps, r));
    } catch (const Error& e) {
      print_error(err, e);
      return kExitUsage;
    }
    return kExitOk;
  }

  if (serve_cmd->parsed()) {
    service_config.kb_dir = kb_dir;
    if (!static_dir.empty()) service_config.static_dir = static_dir;
    return serve(service_config, err);
  }
  return kExitUsage;
}

}  // namespace ontosearch
