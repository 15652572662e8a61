#include <algorithm>
#include <fstream>
#include <sstream>

#include "ontosearch/error.hpp"
#include "ontosearch/knowledge_base.hpp"
#include "ontosearch/rdf_parser.hpp"

namespace ontosearch {

namespace fs = std::filesystem;

namespace {

std::vector<fs::path> rdf_files(const fs::path& dir) {
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) {
    throw Error(ErrorCode::IoError, "knowledge base directory not found: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".rdf") files.push_back(entry.path());
  }
  std::sort(files.begin(), files.end());
  return files;
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

std::vector<Declaration> read_kb_directory(const fs::path& dir) {
  std::vector<Declaration> all;
  for (const fs::path& file : rdf_files(dir)) {
    auto decls = parse_document(slurp(file), file.filename().string());
    all.insert(all.end(), std::make_move_iterator(decls.begin()),
               std::make_move_iterator(decls.end()));
  }
  return all;
}

KnowledgeBase load_knowledge_base(const fs::path& dir) {
  auto files = rdf_files(dir);
  if (files.empty()) throw Error(ErrorCode::IoError, "no .rdf files in " + dir.string());
  auto decls = read_kb_directory(dir);
  return KnowledgeBase::build(decls, files.size());
}

}  // namespace ontosearch
