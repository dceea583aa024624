#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace synlat {

/// A word over the alphabet. The empty string is the empty word.
using Word = std::string;

/// Characters with a syntactic role in the regex or term grammars.
inline constexpr std::string_view kReservedChars = "|*+?()%^._ \t\r\n";

/// Finite ordered set of single-character letters. Letters are kept sorted,
/// so character order and alphabet order coincide.
class Alphabet {
 public:
  Alphabet() = default;

  explicit Alphabet(std::string_view letters) : letters_(letters) {
    std::sort(letters_.begin(), letters_.end());
    letters_.erase(std::unique(letters_.begin(), letters_.end()), letters_.end());
    if (letters_.empty()) throw std::invalid_argument("alphabet must be non-empty");
    for (char c : letters_) {
      auto uc = static_cast<unsigned char>(c);
      if (uc < 0x21 || uc > 0x7e || kReservedChars.find(c) != std::string_view::npos)
        throw std::invalid_argument(std::string("character '") + c + "' cannot be a letter");
    }
  }

  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  char letter(std::size_t i) const { return letters_.at(i); }
  const std::string& letters() const noexcept { return letters_; }

  std::optional<std::size_t> index(char c) const {
    auto it = std::lower_bound(letters_.begin(), letters_.end(), c);
    if (it == letters_.end() || *it != c) return std::nullopt;
    return static_cast<std::size_t>(it - letters_.begin());
  }

  std::size_t index_or_throw(char c) const {
    auto i = index(c);
    if (!i) throw std::invalid_argument(std::string("letter '") + c + "' is not in the alphabet");
    return *i;
  }

  bool contains(char c) const { return index(c).has_value(); }

  bool operator==(const Alphabet&) const = default;

 private:
  std::string letters_;
};

/// Shortlex order: shorter words first, then lexicographic.
inline bool shortlex_less(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

/// Printable form of a word; the empty word prints as "%e".
inline std::string word_text(std::string_view w) { return w.empty() ? "%e" : std::string(w); }

}  // namespace synlat
