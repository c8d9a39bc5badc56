#ifndef DG_PRESENTATION_HPP
#define DG_PRESENTATION_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "dg/word.hpp"

namespace dg {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One defining relation lhs = rhs. "Forward" always means lhs -> rhs.
struct Relation {
  Word lhs;
  Word rhs;
  friend bool operator==(const Relation&, const Relation&) = default;
};

enum class ViolationKind { UnknownSymbol, EmptySide, DuplicateSymbol };

struct Violation {
  ViolationKind kind;
  std::string detail;
};

// A semigroup presentation <alphabet | relations>. Immutable after
// construction; relation order is significant because atoms refer to
// relations by index.
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> alphabet,
               std::vector<Relation> relations);

  const std::vector<std::string>& alphabet() const { return alphabet_; }
  const std::vector<Relation>& relations() const { return relations_; }

  std::optional<SymbolId> find_symbol(const std::string& name) const;
  const std::string& symbol_name(SymbolId id) const {
    return alphabet_.at(static_cast<std::size_t>(id));
  }

  // Whitespace-separated symbol tokens. A lone "%" denotes the empty word.
  // A token that is not a symbol name but decomposes uniquely into
  // single-character symbol names is accepted as that word ("xxx" over {x}).
  Word parse_word(const std::string& text) const;

  std::string word_string(const Word& w) const;   // tokens joined by ' '
  std::string display_word(const Word& w) const;  // same, but "%" for empty

 private:
  std::vector<std::string> alphabet_;
  std::vector<Relation> relations_;
  std::unordered_map<std::string, SymbolId> index_;
};

// Parses the line-oriented presentation file format:
//   # comment
//   letters: s1 s2 ...        (exactly one line)
//   rule: u = v               (zero or more)
Presentation parse_presentation(const std::string& text);

// Byte-stable serialization; parse_presentation(serialize(p)) == p.
std::string serialize(const Presentation& p);

std::vector<Violation> validate(const Presentation& p);

// Adds two fresh symbols a, b and relations a·x = a, x·b = b for every
// original symbol x. Fresh names are suffixed when "a"/"b" are taken.
Presentation q_transform(const Presentation& p);

std::uint64_t presentation_hash(const Presentation& p);

}  // namespace dg

#endif  // DG_PRESENTATION_HPP
