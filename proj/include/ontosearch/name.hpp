#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ontosearch {

/// Lowercases ASCII letters; other bytes pass through unchanged.
std::string fold_case(std::string_view text);

bool is_name_char(char c);

/// True for a non-empty token of letters, digits, `_` and `-`.
bool is_valid_name(std::string_view text);

/// Identifier of a class, instance or property.
///
/// Names keep the spelling they were declared with but compare, order and
/// hash case-insensitively, so `vegetable` and `Vegetable` are the same name.
class Name {
public:
  /// Throws std::invalid_argument unless is_valid_name(text).
  explicit Name(std::string text);

  static std::optional<Name> parse(std::string_view text);

  const std::string& text() const noexcept { return text_; }
  const std::string& key() const noexcept { return key_; }

  friend bool operator==(const Name& a, const Name& b) noexcept { return a.key_ == b.key_; }
  friend std::strong_ordering operator<=>(const Name& a, const Name& b) noexcept {
    return a.key_ <=> b.key_;
  }

private:
  std::string text_;
  std::string key_;
};

inline std::ostream& operator<<(std::ostream& os, const Name& n) { return os << n.text(); }

}  // namespace ontosearch
