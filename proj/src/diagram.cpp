#include "dg/diagram.hpp"

#include <sstream>

namespace dg {

namespace {

const Relation& relation_of(const Presentation& p, const Atom& a) {
  if (a.rel < 0 || static_cast<std::size_t>(a.rel) >= p.relations().size()) {
    throw InvalidDiagram("atom references relation #" + std::to_string(a.rel) +
                         " which does not exist");
  }
  return p.relations()[static_cast<std::size_t>(a.rel)];
}

}  // namespace

const Word& in_side(const Presentation& p, const Atom& a) {
  const Relation& r = relation_of(p, a);
  return a.orient == Orient::F ? r.lhs : r.rhs;
}

const Word& out_side(const Presentation& p, const Atom& a) {
  const Relation& r = relation_of(p, a);
  return a.orient == Orient::F ? r.rhs : r.lhs;
}

std::int32_t width_delta(const Presentation& p, const Atom& a) {
  return static_cast<std::int32_t>(out_side(p, a).size()) -
         static_cast<std::int32_t>(in_side(p, a).size());
}

bool applicable(const Presentation& p, const Word& w, const Atom& a) {
  if (a.offset < 0 || a.rel < 0 ||
      static_cast<std::size_t>(a.rel) >= p.relations().size()) {
    return false;
  }
  return matches_at(w, in_side(p, a), static_cast<std::size_t>(a.offset));
}

Word apply_atom(const Presentation& p, const Word& w, const Atom& a) {
  if (!applicable(p, w, a)) {
    throw InvalidDiagram("atom " + std::string(1, orient_char(a.orient)) +
                         "@" + std::to_string(a.offset) + ":r" +
                         std::to_string(a.rel) + " is not applicable");
  }
  return splice(w, static_cast<std::size_t>(a.offset), in_side(p, a).size(),
                out_side(p, a));
}

Diagram make_trivial(Word w) { return Diagram{std::move(w), {}}; }

Word bottom(const Presentation& p, const Diagram& d) {
  Word w = d.top;
  for (const Atom& a : d.atoms) {
    w = apply_atom(p, w, a);
  }
  return w;
}

bool is_valid(const Presentation& p, const Diagram& d) {
  Word w = d.top;
  for (const Atom& a : d.atoms) {
    if (!applicable(p, w, a)) {
      return false;
    }
    w = apply_atom(p, w, a);
  }
  return true;
}

Diagram compose(const Presentation& p, const Diagram& d1, const Diagram& d2) {
  if (bottom(p, d1) != d2.top) {
    throw InvalidDiagram("compose: bottom of first diagram differs from top "
                         "of second");
  }
  Diagram out{d1.top, d1.atoms};
  out.atoms.insert(out.atoms.end(), d2.atoms.begin(), d2.atoms.end());
  return out;
}

Diagram sum(const Presentation& p, const Diagram& d1, const Diagram& d2) {
  const std::int32_t shift = static_cast<std::int32_t>(bottom(p, d1).size());
  Diagram out;
  out.top = d1.top;
  out.top.insert(out.top.end(), d2.top.begin(), d2.top.end());
  out.atoms = d1.atoms;
  for (Atom a : d2.atoms) {
    a.offset += shift;
    out.atoms.push_back(a);
  }
  return out;
}

Diagram inverse(const Presentation& p, const Diagram& d) {
  Diagram out;
  out.top = bottom(p, d);
  out.atoms.reserve(d.atoms.size());
  for (auto it = d.atoms.rbegin(); it != d.atoms.rend(); ++it) {
    out.atoms.push_back(Atom{it->offset, it->rel, flip(it->orient)});
  }
  return out;
}

Diagram parse_diagram(const Presentation& p, const std::string& text) {
  std::istringstream in(text);
  std::string line;
  Diagram d;
  bool have_top = false;
  while (std::getline(in, line)) {
    std::size_t b = line.find_first_not_of(" \t\r");
    if (b == std::string::npos) {
      continue;
    }
    std::string s = line.substr(b);
    while (!s.empty() && (s.back() == '\r' || s.back() == ' ')) {
      s.pop_back();
    }
    if (s.empty() || s[0] == '#') {
      continue;
    }
    if (s.rfind("top:", 0) == 0) {
      if (have_top) {
        throw ParseError("duplicate 'top:' line in diagram");
      }
      have_top = true;
      d.top = p.parse_word(s.substr(4));
      continue;
    }
    if (s.rfind("atom:", 0) == 0) {
      std::istringstream as(s.substr(5));
      std::string o;
      std::int64_t off = -1, rel = -1;
      if (!(as >> o >> off >> rel) || (o != "F" && o != "B") || off < 0 ||
          rel < 0) {
        throw ParseError("bad atom line: " + s);
      }
      d.atoms.push_back(Atom{static_cast<std::int32_t>(off),
                             static_cast<std::int32_t>(rel),
                             o == "F" ? Orient::F : Orient::B});
      continue;
    }
    throw ParseError("unrecognized diagram line: " + s);
  }
  if (!have_top) {
    throw ParseError("diagram file missing 'top:' line");
  }
  if (!is_valid(p, d)) {
    throw InvalidDiagram("diagram atoms do not replay from the top word");
  }
  return d;
}

std::string serialize(const Presentation& p, const Diagram& d) {
  std::string out = "top:";
  std::string w = p.word_string(d.top);
  if (!w.empty()) {
    out += ' ';
    out += w;
  }
  out += '\n';
  for (const Atom& a : d.atoms) {
    out += "atom: ";
    out += orient_char(a.orient);
    out += ' ' + std::to_string(a.offset) + ' ' + std::to_string(a.rel) + '\n';
  }
  return out;
}

std::string atoms_string(const Diagram& d) {
  std::string out = "[";
  for (std::size_t i = 0; i < d.atoms.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    const Atom& a = d.atoms[i];
    out += orient_char(a.orient);
    out += '@' + std::to_string(a.offset) + ":r" + std::to_string(a.rel);
  }
  out += ']';
  return out;
}

}  // namespace dg
