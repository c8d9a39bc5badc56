#include "dg/presentation.hpp"

#include <sstream>

namespace dg {

namespace {

std::vector<std::string> split_tokens(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  std::string tok;
  while (in >> tok) {
    out.push_back(tok);
  }
  return out;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) {
    return "";
  }
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

}  // namespace

Presentation::Presentation(std::vector<std::string> alphabet,
                           std::vector<Relation> relations)
    : alphabet_(std::move(alphabet)), relations_(std::move(relations)) {
  for (std::size_t i = 0; i < alphabet_.size(); ++i) {
    // First declaration wins; validate() reports duplicates.
    index_.emplace(alphabet_[i], static_cast<SymbolId>(i));
  }
}

std::optional<SymbolId> Presentation::find_symbol(
    const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

Word Presentation::parse_word(const std::string& text) const {
  std::vector<std::string> toks = split_tokens(text);
  if (toks.size() == 1 && toks[0] == "%") {
    return {};
  }
  Word w;
  for (const std::string& t : toks) {
    if (t == "%") {
      throw ParseError("'%' must stand alone to denote the empty word");
    }
    auto id = find_symbol(t);
    if (id) {
      w.push_back(*id);
      continue;
    }
    // Fallback: a run of single-character symbol names, e.g. "xxx".
    Word expanded;
    bool ok = !t.empty();
    for (char c : t) {
      auto cid = find_symbol(std::string(1, c));
      if (!cid) {
        ok = false;
        break;
      }
      expanded.push_back(*cid);
    }
    if (!ok) {
      throw ParseError("unknown symbol '" + t + "'");
    }
    w.insert(w.end(), expanded.begin(), expanded.end());
  }
  return w;
}

std::string Presentation::word_string(const Word& w) const {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i > 0) {
      out += ' ';
    }
    out += symbol_name(w[i]);
  }
  return out;
}

std::string Presentation::display_word(const Word& w) const {
  if (w.empty()) {
    return "%";
  }
  return word_string(w);
}

Presentation parse_presentation(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::string> alphabet;
  std::vector<std::pair<std::string, std::string>> raw_rules;
  bool have_letters = false;

  while (std::getline(in, line)) {
    std::string s = strip(line);
    if (s.empty() || s[0] == '#') {
      continue;
    }
    if (s.rfind("letters:", 0) == 0) {
      if (have_letters) {
        throw ParseError("duplicate 'letters:' line");
      }
      have_letters = true;
      alphabet = split_tokens(s.substr(8));
      continue;
    }
    if (s.rfind("rule:", 0) == 0) {
      std::string body = s.substr(5);
      std::size_t eq = body.find('=');
      if (eq == std::string::npos) {
        throw ParseError("rule line missing '=': " + s);
      }
      raw_rules.emplace_back(strip(body.substr(0, eq)),
                             strip(body.substr(eq + 1)));
      continue;
    }
    throw ParseError("unrecognized line: " + s);
  }
  if (!have_letters) {
    throw ParseError("missing 'letters:' line");
  }
  for (std::size_t i = 0; i < alphabet.size(); ++i) {
    for (std::size_t j = i + 1; j < alphabet.size(); ++j) {
      if (alphabet[i] == alphabet[j]) {
        throw ParseError("duplicate symbol declaration '" + alphabet[i] + "'");
      }
    }
  }

  Presentation skeleton(alphabet, {});
  std::vector<Relation> relations;
  for (const auto& [ls, rs] : raw_rules) {
    if (ls.empty() || rs.empty()) {
      throw ParseError("EmptySide: relation sides must be nonempty words");
    }
    Relation rel{skeleton.parse_word(ls), skeleton.parse_word(rs)};
    if (rel.lhs.empty() || rel.rhs.empty()) {
      throw ParseError("EmptySide: relation sides must be nonempty words");
    }
    relations.push_back(std::move(rel));
  }
  return Presentation(std::move(alphabet), std::move(relations));
}

std::string serialize(const Presentation& p) {
  std::string out = "letters:";
  for (const std::string& s : p.alphabet()) {
    out += ' ';
    out += s;
  }
  out += '\n';
  for (const Relation& r : p.relations()) {
    out += "rule: " + p.word_string(r.lhs) + " = " + p.word_string(r.rhs) +
           "\n";
  }
  return out;
}

std::vector<Violation> validate(const Presentation& p) {
  std::vector<Violation> out;
  const auto& alpha = p.alphabet();
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    if (alpha[i].empty()) {
      out.push_back({ViolationKind::UnknownSymbol, "empty symbol name"});
    }
    for (std::size_t j = i + 1; j < alpha.size(); ++j) {
      if (alpha[i] == alpha[j]) {
        out.push_back({ViolationKind::DuplicateSymbol, alpha[i]});
      }
    }
  }
  const SymbolId n = static_cast<SymbolId>(alpha.size());
  for (std::size_t k = 0; k < p.relations().size(); ++k) {
    const Relation& r = p.relations()[k];
    const std::string where = "relation #" + std::to_string(k);
    if (r.lhs.empty() || r.rhs.empty()) {
      out.push_back({ViolationKind::EmptySide, where});
    }
    for (const Word* side : {&r.lhs, &r.rhs}) {
      for (SymbolId id : *side) {
        if (id < 0 || id >= n) {
          out.push_back({ViolationKind::UnknownSymbol, where});
        }
      }
    }
  }
  return out;
}

Presentation q_transform(const Presentation& p) {
  std::string a_name = "a";
  std::string b_name = "b";
  for (int suffix = 1; p.find_symbol(a_name) || p.find_symbol(b_name);
       ++suffix) {
    a_name = "a" + std::to_string(suffix);
    b_name = "b" + std::to_string(suffix);
  }

  std::vector<std::string> alphabet = p.alphabet();
  const SymbolId a = static_cast<SymbolId>(alphabet.size());
  const SymbolId b = a + 1;
  alphabet.push_back(a_name);
  alphabet.push_back(b_name);

  std::vector<Relation> relations = p.relations();
  const SymbolId n = static_cast<SymbolId>(p.alphabet().size());
  for (SymbolId x = 0; x < n; ++x) {
    relations.push_back(Relation{{a, x}, {a}});
  }
  for (SymbolId x = 0; x < n; ++x) {
    relations.push_back(Relation{{x, b}, {b}});
  }
  return Presentation(std::move(alphabet), std::move(relations));
}

std::uint64_t presentation_hash(const Presentation& p) {
  std::string s = serialize(p);
  return fnv1a64(s.data(), s.size());
}

}  // namespace dg
