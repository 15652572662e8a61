#include "ontosearch/name.hpp"

#include <algorithm>
#include <stdexcept>

namespace ontosearch {

std::string fold_case(std::string_view text) {
  std::string out(text);
  for (char& c : out) {
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c - 'A' + 'a');
  }
  return out;
}

bool is_name_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_' ||
         c == '-';
}

bool is_valid_name(std::string_view text) {
  return !text.empty() && std::all_of(text.begin(), text.end(), is_name_char);
}

Name::Name(std::string text) : text_(std::move(text)), key_(fold_case(text_)) {
  if (!is_valid_name(text_)) throw std::invalid_argument("invalid name: '" + text_ + "'");
}

std::optional<Name> Name::parse(std::string_view text) {
  if (!is_valid_name(text)) return std::nullopt;
  return Name(std::string(text));
}

}  // namespace ontosearch
