#include "dg/thompson.hpp"

#include <cstdio>
#include <deque>
#include <map>
#include <sstream>

namespace dg {

Presentation dunce_hat() {
  return Presentation({"x"}, {Relation{{0, 0}, {0}}});
}

std::pair<Diagram, Diagram> f_generators() {
  Diagram y0{{0},
             {{0, 0, Orient::B}, {0, 0, Orient::B}, {1, 0, Orient::F},
              {0, 0, Orient::F}}};
  Diagram y1{{0},
             {{0, 0, Orient::B}, {1, 0, Orient::B}, {1, 0, Orient::B},
              {2, 0, Orient::F}, {1, 0, Orient::F}, {0, 0, Orient::F}}};
  return {y0, y1};
}

std::vector<Diagram> x_family(const Presentation& p, const Diagram& y0,
                              const Diagram& y1, int upto) {
  std::vector<Diagram> xs;
  xs.push_back(reduce(p, y0));
  if (upto >= 1) {
    xs.push_back(reduce(p, y1));
  }
  for (int i = 2; i <= upto; ++i) {
    xs.push_back(conjugate(p, xs.back(), xs[0]));
  }
  return xs;
}

Diagram x_gen(const Presentation& p, int i, const Diagram& y0,
              const Diagram& y1) {
  return x_family(p, y0, y1, i).back();
}

PairReport verify_canonical_pair(const Presentation& p, const Diagram& y0,
                                 const Diagram& y1) {
  if (y0.top != y1.top) {
    throw InvalidDiagram("verify_canonical_pair: base mismatch");
  }
  if (!is_spherical(p, y0) || !is_spherical(p, y1)) {
    throw InvalidDiagram("verify_canonical_pair: diagrams must be spherical");
  }
  PairReport report;
  std::vector<Diagram> xs = x_family(p, y0, y1, 4);
  for (std::size_t i = 0; i < 5; ++i) {
    report.x_cells[i] = cells(xs[i]);
  }
  report.rel1_ok = equal_diagrams(p, conjugate(p, xs[2], xs[1]), xs[3]);
  report.rel2_ok = equal_diagrams(p, conjugate(p, xs[3], xs[1]), xs[4]);
  report.noncommute = !equal_diagrams(p, reduce(p, compose(p, xs[0], xs[1])),
                                      reduce(p, compose(p, xs[1], xs[0])));
  return report;
}

Diagram substitution_hom(const Presentation& p, const Diagram& big_e,
                         const Diagram& d) {
  const Word e = bottom(p, big_e);
  if (e.empty()) {
    throw InvalidDiagram("substitution_hom: e must be nonempty");
  }
  Word ee = e;
  ee.insert(ee.end(), e.begin(), e.end());
  if (big_e.top != ee) {
    throw InvalidDiagram("substitution_hom: E is not an (e·e, e)-diagram");
  }
  const Presentation dunce = dunce_hat();
  if (!is_valid(dunce, d)) {
    throw InvalidDiagram("substitution_hom: d is not a dunce-hat diagram");
  }
  const std::int32_t elen = static_cast<std::int32_t>(e.size());
  const Diagram inv_e = inverse(p, big_e);

  Diagram out;
  for (std::size_t i = 0; i < d.top.size(); ++i) {
    out.top.insert(out.top.end(), e.begin(), e.end());
  }
  for (const Atom& a : d.atoms) {
    const Diagram& block = (a.orient == Orient::F) ? big_e : inv_e;
    for (const Atom& ba : block.atoms) {
      out.atoms.push_back(
          Atom{ba.offset + a.offset * elen, ba.rel, ba.orient});
    }
  }
  if (!is_valid(p, out)) {
    throw InvalidDiagram("substitution_hom: image fails to replay");
  }
  return out;
}

namespace {

// Bounded breadth-first search from w for a word containing e as a factor;
// returns the derivation to the first hit (leftmost occurrence used by the
// caller to split off w1 and w2).
std::optional<Derivation> find_factorization(const Presentation& p,
                                             const Word& w, const Word& e,
                                             Caps caps) {
  auto contains = [&](const Word& host) { return find_factor(host, e) >= 0; };
  std::map<Word, std::pair<Word, Atom>> parent;
  std::deque<Word> queue;
  parent.emplace(w, std::make_pair(Word{}, Atom{0, 0, Orient::F}));
  queue.push_back(w);
  std::int64_t budget = caps.node_budget;

  auto derivation_to = [&](const Word& target) {
    Derivation d;
    d.start = w;
    Word cur = target;
    std::vector<Atom> steps;
    while (cur != w) {
      const auto& [par, atom] = parent.at(cur);
      steps.push_back(atom);
      cur = par;
    }
    d.steps.assign(steps.rbegin(), steps.rend());
    return d;
  };

  if (contains(w)) {
    return derivation_to(w);
  }
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t off = 0; off <= cur.size(); ++off) {
      for (std::size_t r = 0; r < p.relations().size(); ++r) {
        for (Orient o : {Orient::F, Orient::B}) {
          Atom a{static_cast<std::int32_t>(off), static_cast<std::int32_t>(r),
                 o};
          if (!applicable(p, cur, a)) {
            continue;
          }
          if (--budget < 0) {
            return std::nullopt;
          }
          Word next = apply_atom(p, cur, a);
          if (static_cast<std::int32_t>(next.size()) > caps.max_word_len) {
            continue;
          }
          if (parent.contains(next)) {
            continue;
          }
          parent.emplace(next, std::make_pair(cur, a));
          if (contains(next)) {
            return derivation_to(next);
          }
          queue.push_back(next);
        }
      }
    }
  }
  return std::nullopt;
}

Diagram identity_block(const Word& w) { return make_trivial(w); }

EmbeddingWitness build_witness(const Presentation& p,
                               IdempotentWitness witness) {
  // E must run (e·e) -> e; the idempotency certificate already does.
  Diagram big_e = derivation_to_diagram(p, witness.cert_idem);
  Diagram gamma = derivation_to_diagram(p, witness.cert_factor);

  auto [y0d, y1d] = f_generators();
  EmbeddingWitness out;
  out.witness = std::move(witness);
  const Word& w1 = out.witness.w1;
  const Word& w2 = out.witness.w2;

  auto embed_one = [&](const Diagram& yd) {
    Diagram mid = sum(p, identity_block(w1),
                      sum(p, substitution_hom(p, big_e, yd),
                          identity_block(w2)));
    Diagram conj = compose(p, compose(p, gamma, mid), inverse(p, gamma));
    return reduce(p, conj);
  };
  out.y0 = embed_one(y0d);
  out.y1 = embed_one(y1d);
  out.report = verify_canonical_pair(p, out.y0, out.y1);
  return out;
}

}  // namespace

EmbedOutcome embed_f(const Presentation& p, const Word& w,
                     std::int32_t max_idem_len, Caps caps) {
  if (w.empty()) {
    throw InvalidDiagram("embed_f: base word must be nonempty");
  }
  EmbedOutcome outcome;
  IdempotentSearchResult idems = idempotent_search(p, max_idem_len, caps);
  if (idems.found.empty()) {
    outcome.decisive_absence = idems.complete;
    return outcome;
  }
  for (const IdempotentHit& hit : idems.found) {
    auto factor = find_factorization(p, w, hit.e, caps);
    if (!factor) {
      continue;
    }
    Word reached = replay(p, *factor);
    std::ptrdiff_t at = find_factor(reached, hit.e);
    IdempotentWitness witness;
    witness.e = hit.e;
    witness.w1.assign(reached.begin(), reached.begin() + at);
    witness.w2.assign(reached.begin() + at +
                          static_cast<std::ptrdiff_t>(hit.e.size()),
                      reached.end());
    witness.cert_idem = hit.cert;
    witness.cert_factor = *factor;

    EmbeddingWitness built = build_witness(p, std::move(witness));
    if (built.report.pass()) {
      outcome.witness = std::move(built);
      return outcome;
    }
  }
  return outcome;
}

namespace {

std::string derivation_lines(const Presentation& p, const std::string& key,
                             const Derivation& d) {
  std::string out = key + "-start: " + p.word_string(d.start) + "\n";
  for (const Atom& a : d.steps) {
    out += key + "-step: ";
    out += orient_char(a.orient);
    out += ' ' + std::to_string(a.offset) + ' ' + std::to_string(a.rel) + '\n';
  }
  return out;
}

std::string diagram_lines(const Presentation& p, const std::string& key,
                          const Diagram& d) {
  std::string out = key + "-top: " + p.word_string(d.top) + "\n";
  for (const Atom& a : d.atoms) {
    out += key + "-atom: ";
    out += orient_char(a.orient);
    out += ' ' + std::to_string(a.offset) + ' ' + std::to_string(a.rel) + '\n';
  }
  return out;
}

}  // namespace

std::string serialize_witness(const Presentation& p, const Word& w,
                              const EmbeddingWitness& ew) {
  std::ostringstream out;
  out << "# embedding witness: base word factors through an idempotent\n";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%016llx",
                static_cast<unsigned long long>(presentation_hash(p)));
  out << "presentation-hash: " << buf << "\n";
  out << "w: " << p.word_string(w) << "\n";
  out << "w1: " << p.word_string(ew.witness.w1) << "\n";
  out << "e: " << p.word_string(ew.witness.e) << "\n";
  out << "w2: " << p.word_string(ew.witness.w2) << "\n";
  out << derivation_lines(p, "idem", ew.witness.cert_idem);
  out << derivation_lines(p, "factor", ew.witness.cert_factor);
  out << diagram_lines(p, "y0", ew.y0);
  out << diagram_lines(p, "y1", ew.y1);
  return out.str();
}

ParsedWitness parse_witness(const Presentation& p, const std::string& text) {
  ParsedWitness pw;
  std::istringstream in(text);
  std::string line;
  auto parse_atom = [](const std::string& rest) {
    std::istringstream as(rest);
    std::string o;
    std::int64_t off = -1, rel = -1;
    if (!(as >> o >> off >> rel) || (o != "F" && o != "B") || off < 0 ||
        rel < 0) {
      throw ParseError("bad step/atom line: " + rest);
    }
    return Atom{static_cast<std::int32_t>(off), static_cast<std::int32_t>(rel),
                o == "F" ? Orient::F : Orient::B};
  };
  while (std::getline(in, line)) {
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.pop_back();
    }
    if (line.empty() || line[0] == '#') {
      continue;
    }
    std::size_t colon = line.find(':');
    if (colon == std::string::npos) {
      throw ParseError("bad witness line: " + line);
    }
    std::string key = line.substr(0, colon);
    std::string rest = line.substr(colon + 1);
    if (key == "presentation-hash") {
      pw.presentation_hash = std::stoull(rest, nullptr, 16);
    } else if (key == "w") {
      pw.w = p.parse_word(rest);
    } else if (key == "w1") {
      pw.data.witness.w1 = p.parse_word(rest);
    } else if (key == "e") {
      pw.data.witness.e = p.parse_word(rest);
    } else if (key == "w2") {
      pw.data.witness.w2 = p.parse_word(rest);
    } else if (key == "idem-start") {
      pw.data.witness.cert_idem.start = p.parse_word(rest);
    } else if (key == "idem-step") {
      pw.data.witness.cert_idem.steps.push_back(parse_atom(rest));
    } else if (key == "factor-start") {
      pw.data.witness.cert_factor.start = p.parse_word(rest);
    } else if (key == "factor-step") {
      pw.data.witness.cert_factor.steps.push_back(parse_atom(rest));
    } else if (key == "y0-top") {
      pw.data.y0.top = p.parse_word(rest);
    } else if (key == "y0-atom") {
      pw.data.y0.atoms.push_back(parse_atom(rest));
    } else if (key == "y1-top") {
      pw.data.y1.top = p.parse_word(rest);
    } else if (key == "y1-atom") {
      pw.data.y1.atoms.push_back(parse_atom(rest));
    } else {
      throw ParseError("unknown witness key: " + key);
    }
  }
  return pw;
}

WitnessVerification verify_witness(const Presentation& p,
                                   const std::string& text) {
  WitnessVerification v;
  ParsedWitness pw = parse_witness(p, text);
  v.hash_ok = pw.presentation_hash == presentation_hash(p);

  const IdempotentWitness& iw = pw.data.witness;
  Word ee = iw.e;
  ee.insert(ee.end(), iw.e.begin(), iw.e.end());
  try {
    v.idem_ok = iw.cert_idem.start == ee && replay(p, iw.cert_idem) == iw.e;
  } catch (const InvalidDiagram&) {
    v.idem_ok = false;
  }
  Word w1ew2 = iw.w1;
  w1ew2.insert(w1ew2.end(), iw.e.begin(), iw.e.end());
  w1ew2.insert(w1ew2.end(), iw.w2.begin(), iw.w2.end());
  try {
    v.factor_ok =
        iw.cert_factor.start == pw.w && replay(p, iw.cert_factor) == w1ew2;
  } catch (const InvalidDiagram&) {
    v.factor_ok = false;
  }

  if (v.idem_ok && v.factor_ok) {
    EmbeddingWitness rebuilt = build_witness(p, pw.data.witness);
    v.rebuild_ok = equal_diagrams(p, rebuilt.y0, pw.data.y0) &&
                   equal_diagrams(p, rebuilt.y1, pw.data.y1);
    v.report = verify_canonical_pair(p, pw.data.y0, pw.data.y1);
  }
  return v;
}

}  // namespace dg
