// dg: command-line front end for the diagram-group calculus.
//
// Exit codes: 0 success / affirmative, 1 negative result (unequal, not
// found, failed verification), 2 usage or parse error, 3 cap exhaustion
// (unknown verdicts, exceeded bounds, timeouts). Every command ends its
// output with a status line "OK|FAIL|UNKNOWN <detail>".

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "dg/canonical.hpp"
#include "dg/diagram.hpp"
#include "dg/dot.hpp"
#include "dg/groupops.hpp"
#include "dg/oracle.hpp"
#include "dg/planar.hpp"
#include "dg/presentation.hpp"
#include "dg/rewrite.hpp"
#include "dg/thompson.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kCaps = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw dg::ParseError("cannot open file: " + path);
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) {
    throw dg::ParseError("cannot open output file: " + path);
  }
  out << text;
}

struct Context {
  std::string presentation_path;
  std::string output_path;
  dg::Caps caps;
  std::int32_t max_len = 4;
  bool strict_isotopy = false;

  dg::Presentation presentation() const {
    if (presentation_path.empty()) {
      throw dg::ParseError("this command needs -p <presentation file>");
    }
    return dg::parse_presentation(read_file(presentation_path));
  }
  dg::Diagram diagram(const dg::Presentation& p,
                      const std::string& path) const {
    return dg::parse_diagram(p, read_file(path));
  }
};

int ok(const std::string& detail) {
  std::cout << "OK " << detail << "\n";
  return kOk;
}
int fail(const std::string& detail) {
  std::cout << "FAIL " << detail << "\n";
  return kNegative;
}
int unknown(const std::string& detail) {
  std::cout << "UNKNOWN " << detail << "\n";
  return kCaps;
}

std::string derivation_text(const dg::Presentation& p,
                            const dg::Derivation& d) {
  std::ostringstream out;
  dg::Word w = d.start;
  out << "  " << p.display_word(w) << "\n";
  for (const dg::Atom& a : d.steps) {
    w = dg::apply_atom(p, w, a);
    out << "  -> " << p.display_word(w) << "   (" << dg::orient_char(a.orient)
        << " @" << a.offset << " r" << a.rel << ")\n";
  }
  return out.str();
}

int cmd_wp(const Context& ctx, const std::string& u_text,
           const std::string& v_text) {
  dg::Presentation p = ctx.presentation();
  dg::Word u = p.parse_word(u_text);
  dg::Word v = p.parse_word(v_text);
  dg::Verdict verdict = dg::equal_mod_p(p, u, v, ctx.caps);
  switch (verdict.kind) {
    case dg::VerdictKind::Equal:
      std::cout << "EQUAL\n" << derivation_text(p, *verdict.derivation);
      return ok("EQUAL (" + std::to_string(verdict.derivation->steps.size()) +
                " steps)");
    case dg::VerdictKind::NoWitnessUnderCap:
      if (verdict.decisive) {
        std::cout << "DISTINCT\n";
        return fail("DISTINCT (decisive)");
      }
      std::cout << "NO-WITNESS\n";
      return unknown("no witness under caps, not decisive");
    case dg::VerdictKind::Unknown:
    default:
      return unknown("node budget exhausted");
  }
}

int cmd_kb(const Context& ctx) {
  dg::Presentation p = ctx.presentation();
  auto cs = dg::kb_complete(p);
  if (!cs) {
    return unknown("completion budget exhausted");
  }
  for (const dg::Relation& r : cs->rules) {
    std::cout << "rule: " << p.word_string(r.lhs) << " -> "
              << p.word_string(r.rhs) << "\n";
  }
  std::cout << "confluent: " << (cs->confluent ? "true" : "false") << "\n";
  return ok("confluent system with " + std::to_string(cs->rules.size()) +
            " rules");
}

int cmd_idem(const Context& ctx) {
  dg::Presentation p = ctx.presentation();
  auto result = dg::idempotent_search(p, ctx.max_len, ctx.caps);
  for (const auto& hit : result.found) {
    std::cout << "idem: " << p.word_string(hit.e) << "   ("
              << hit.cert.steps.size() << "-step certificate)\n";
  }
  if (!result.found.empty()) {
    return ok(std::to_string(result.found.size()) +
              " idempotent(s) up to length " + std::to_string(ctx.max_len));
  }
  if (result.complete) {
    return fail("no idempotent up to length " + std::to_string(ctx.max_len) +
                " (decisive)");
  }
  return unknown("none found; search incomplete under caps");
}

int cmd_qof(const Context& ctx) {
  dg::Presentation p = ctx.presentation();
  dg::Presentation q = dg::q_transform(p);
  write_output(ctx.output_path, dg::serialize(q));
  return ok("Q-presentation with " + std::to_string(q.relations().size()) +
            " relations");
}

int emit_diagram(const Context& ctx, const dg::Presentation& p,
                 const dg::Diagram& d, const std::string& detail) {
  write_output(ctx.output_path, dg::serialize(p, d));
  return ok(detail);
}

int cmd_eq(const Context& ctx, const std::string& p1, const std::string& p2) {
  dg::Presentation p = ctx.presentation();
  dg::Diagram d1 = ctx.diagram(p, p1);
  dg::Diagram d2 = ctx.diagram(p, p2);
  if (dg::equal_diagrams(p, d1, d2, ctx.strict_isotopy)) {
    std::cout << "EQUAL\n";
    return ok(ctx.strict_isotopy ? "equal as diagrams (isotopy)"
                                 : "equal in the diagram group");
  }
  std::cout << "DISTINCT\n";
  return fail("distinct");
}

int cmd_comp(const Context& ctx, const std::string& path) {
  dg::Presentation p = ctx.presentation();
  dg::Diagram d = ctx.diagram(p, path);
  std::int32_t c = dg::comp(p, d);
  std::cout << "comp: " << c << "\n";
  return ok("comp = " + std::to_string(c));
}

int cmd_components(const Context& ctx, const std::string& path) {
  dg::Presentation p = ctx.presentation();
  dg::Diagram d = dg::reduce(p, ctx.diagram(p, path));
  dg::ComponentDecomposition dec = dg::decompose_components(p, d);
  for (std::size_t i = 0; i < dec.parts.size(); ++i) {
    std::cout << "part " << i << ": base '" << p.display_word(dec.bases[i])
              << "', " << dg::cells(dec.parts[i]) << " cells"
              << (dec.parts[i].atoms.empty() ? " (trivial)" : "") << "\n";
  }
  std::cout << "split-vertices:";
  for (std::int32_t v : dec.split_vertices) {
    std::cout << " " << v;
  }
  std::cout << "\n";
  return ok(std::to_string(dec.parts.size()) + " part(s)");
}

int cmd_absred(const Context& ctx, const std::string& path) {
  dg::Presentation p = ctx.presentation();
  dg::Diagram d = ctx.diagram(p, path);
  dg::CyclicReduction cr = dg::absolutely_reduce(p, d);
  std::cout << "conjugator:\n" << dg::serialize(p, cr.conjugator);
  std::cout << "core:\n" << dg::serialize(p, cr.core);
  if (!ctx.output_path.empty()) {
    write_output(ctx.output_path + ".psi.dgm",
                 dg::serialize(p, cr.conjugator));
    write_output(ctx.output_path + ".core.dgm", dg::serialize(p, cr.core));
  }
  return ok("core has " + std::to_string(dg::cells(cr.core)) +
            " cells over '" + p.display_word(cr.core.top) + "'");
}

int cmd_mu(const Context& ctx, const std::string& path, std::int32_t o1,
           std::int32_t o2) {
  dg::Presentation p = ctx.presentation();
  dg::Diagram d = ctx.diagram(p, path);
  dg::PlanarGraph g = dg::realize(p, d);
  auto label = dg::mu(g, o1, o2);
  if (!label) {
    std::cout << "UNREACHABLE\n";
    return fail("no positive path");
  }
  std::cout << "mu: " << p.display_word(*label) << "\n";
  return ok("label '" + p.display_word(*label) + "'");
}

int cmd_lemma1(const Context& ctx, const std::string& path,
               std::int32_t split) {
  dg::Presentation p = ctx.presentation();
  dg::Diagram d = ctx.diagram(p, path);
  dg::Lemma1Report report = dg::check_lemma1(p, d, split, ctx.caps);
  if (!report.is_sum) {
    std::cout << "NOT-A-SUM\n";
    return fail("reduced form does not split at offset " +
                std::to_string(split));
  }
  std::size_t undecided = 0;
  for (const dg::MuCheck& chk : report.checks) {
    std::cout << "vertex " << chk.vertex << ": '"
              << p.display_word(chk.to_top_split) << "' vs '"
              << p.display_word(chk.to_bottom_split) << "' -> "
              << (chk.verdict == dg::VerdictKind::Equal
                      ? "EQUAL"
                      : (chk.decisive ? "DISTINCT" : "UNDECIDED"))
              << "\n";
    if (chk.verdict != dg::VerdictKind::Equal) {
      ++undecided;
    }
  }
  if (!report.pass) {
    return fail("decisive mu-inequality found");
  }
  return ok(std::to_string(report.checks.size()) +
            " vertex pair(s) checked, " + std::to_string(undecided) +
            " undecided");
}

int cmd_gen_f(const Context& ctx) {
  dg::Presentation p = dg::dunce_hat();
  auto [y0, y1] = dg::f_generators();
  dg::PairReport report = dg::verify_canonical_pair(p, y0, y1);
  if (!ctx.output_path.empty()) {
    write_output(ctx.output_path + "y0.dgm", dg::serialize(p, y0));
    write_output(ctx.output_path + "y1.dgm", dg::serialize(p, y1));
  } else {
    std::cout << "# y0\n" << dg::serialize(p, y0) << "# y1\n"
              << dg::serialize(p, y1);
  }
  std::cout << "rel1: " << (report.rel1_ok ? "ok" : "violated") << "\n"
            << "rel2: " << (report.rel2_ok ? "ok" : "violated") << "\n"
            << "noncommuting: " << (report.noncommute ? "yes" : "no") << "\n"
            << "cells x0..x4:";
  for (std::size_t n : report.x_cells) {
    std::cout << " " << n;
  }
  std::cout << "\n";
  if (!report.pass()) {
    return fail("canonical pair verification failed");
  }
  return ok("canonical generating pair verified");
}

int cmd_embed_f(const Context& ctx, const std::string& w_text) {
  dg::Presentation p = ctx.presentation();
  dg::Word w = p.parse_word(w_text);
  dg::EmbedOutcome out = dg::embed_f(p, w, ctx.max_len, ctx.caps);
  if (out.witness) {
    std::string text = dg::serialize_witness(p, w, *out.witness);
    write_output(ctx.output_path, text);
    const auto& iw = out.witness->witness;
    return ok("witness w1='" + p.display_word(iw.w1) + "' e='" +
              p.display_word(iw.e) + "' w2='" + p.display_word(iw.w2) + "'");
  }
  std::cout << "NOT-FOUND\n";
  if (out.decisive_absence) {
    return fail("no idempotent up to length " + std::to_string(ctx.max_len) +
                "; no copy of F (decisive)");
  }
  return unknown("search exhausted under caps; absence not proven");
}

int cmd_verify_f(const Context& ctx, const std::string& witness_path) {
  dg::Presentation p = ctx.presentation();
  dg::WitnessVerification v = dg::verify_witness(p, read_file(witness_path));
  std::cout << "hash: " << (v.hash_ok ? "ok" : "mismatch") << "\n"
            << "idempotency certificate: " << (v.idem_ok ? "ok" : "broken")
            << "\n"
            << "factorization certificate: "
            << (v.factor_ok ? "ok" : "broken") << "\n"
            << "reconstruction: " << (v.rebuild_ok ? "ok" : "differs") << "\n"
            << "canonical pair: " << (v.report.pass() ? "ok" : "failed")
            << "\n";
  if (v.pass()) {
    return ok("witness verified");
  }
  return fail("witness rejected");
}

int cmd_oracle_check(const Context& ctx, const std::string& path,
                     std::int64_t max_orbit) {
  dg::Presentation p = ctx.presentation();
  dg::Diagram d = ctx.diagram(p, path);
  dg::OrbitBounds b;
  b.max_orbit = max_orbit;
  auto terminals = dg::all_reductions(p, d, b);
  std::cout << "terminal classes: " << terminals.size() << "\n";
  if (terminals.size() != 1) {
    return fail("reduction is not confluent here: " +
                std::to_string(terminals.size()) + " terminal classes");
  }
  dg::Diagram reduced = dg::reduce(p, d);
  if (*terminals.begin() != dg::orbit_min(p, reduced, b)) {
    return fail("reduce() disagrees with the oracle terminal");
  }
  return ok("unique terminal matches reduce()");
}

int cmd_dot(const Context& ctx, const std::string& path) {
  dg::Presentation p = ctx.presentation();
  dg::Diagram d = ctx.diagram(p, path);
  write_output(ctx.output_path, dg::to_dot(p, d));
  return ok("dot graph written");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"diagram groups over semigroup presentations"};
  app.require_subcommand(1);
  app.fallthrough();  // global flags may follow the subcommand

  Context ctx;
  app.add_option("-p,--presentation", ctx.presentation_path,
                 "presentation file (.sgp)");
  app.add_option("-o,--out", ctx.output_path, "output file");
  app.add_option("--max-len", ctx.max_len,
                 "length bound for idempotent search");
  app.add_option("--max-word-len", ctx.caps.max_word_len,
                 "intermediate word length cap");
  app.add_option("--budget", ctx.caps.node_budget, "search node budget");
  app.add_flag("--strict-isotopy", ctx.strict_isotopy,
               "compare diagrams without dipole cancellation");

  std::string arg_u, arg_v, arg_d1, arg_d2, arg_w;
  std::int32_t arg_split = 1, arg_o1 = 0, arg_o2 = 0;
  std::int64_t arg_max_orbit = 1'000'000;

  auto* wp = app.add_subcommand("wp", "word problem: are two words equal?");
  wp->add_option("u", arg_u)->required();
  wp->add_option("v", arg_v)->required();

  auto* kb = app.add_subcommand("kb", "Knuth-Bendix completion");
  auto* idem = app.add_subcommand("idem", "search for idempotents");
  auto* qof = app.add_subcommand("qof", "apply the Q-transformation");
  auto* genf =
      app.add_subcommand("gen-f", "emit and verify the generating pair of F");

  auto* reduce_cmd = app.add_subcommand("reduce", "unique reduced form");
  reduce_cmd->add_option("diagram", arg_d1)->required();
  auto* nf_cmd = app.add_subcommand("nf", "interchange normal form");
  nf_cmd->add_option("diagram", arg_d1)->required();
  auto* eq = app.add_subcommand("eq", "diagram equality");
  eq->add_option("d1", arg_d1)->required();
  eq->add_option("d2", arg_d2)->required();
  auto* mul = app.add_subcommand("mul", "group product (compose and reduce)");
  mul->add_option("d1", arg_d1)->required();
  mul->add_option("d2", arg_d2)->required();
  auto* sum_cmd = app.add_subcommand("sum", "horizontal sum");
  sum_cmd->add_option("d1", arg_d1)->required();
  sum_cmd->add_option("d2", arg_d2)->required();
  auto* inv = app.add_subcommand("inv", "mirror image");
  inv->add_option("diagram", arg_d1)->required();
  auto* conj = app.add_subcommand("conj", "conjugate d by g");
  conj->add_option("diagram", arg_d1)->required();
  conj->add_option("g", arg_d2)->required();
  auto* comp_cmd =
      app.add_subcommand("comp", "number of nontrivial components");
  comp_cmd->add_option("diagram", arg_d1)->required();
  auto* components =
      app.add_subcommand("components", "component decomposition");
  components->add_option("diagram", arg_d1)->required();
  auto* absred = app.add_subcommand("absred", "absolutely reduced form");
  absred->add_option("diagram", arg_d1)->required();
  auto* mu_cmd =
      app.add_subcommand("mu", "positive path label between vertices");
  mu_cmd->add_option("diagram", arg_d1)->required();
  mu_cmd->add_option("o1", arg_o1)->required();
  mu_cmd->add_option("o2", arg_o2)->required();
  auto* lemma1 = app.add_subcommand("lemma1", "mu-equality harness for sums");
  lemma1->add_option("diagram", arg_d1)->required();
  lemma1->add_option("--split", arg_split, "offset |u| of the seam")
      ->required();
  auto* embed = app.add_subcommand("embed-f", "find an F-embedding witness");
  embed->add_option("-w,--word", arg_w, "base word")->required();
  auto* verify = app.add_subcommand("verify-f", "re-verify a witness file");
  verify->add_option("witness", arg_d1)->required();
  auto* oracle_cmd =
      app.add_subcommand("oracle-check", "exhaustive reduction uniqueness");
  oracle_cmd->add_option("diagram", arg_d1)->required();
  oracle_cmd->add_option("--max-orbit", arg_max_orbit);
  auto* dot = app.add_subcommand("dot", "Graphviz export of the realization");
  dot->add_option("diagram", arg_d1)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : kUsage;
  }

  try {
    if (wp->parsed()) {
      return cmd_wp(ctx, arg_u, arg_v);
    }
    if (kb->parsed()) {
      return cmd_kb(ctx);
    }
    if (idem->parsed()) {
      return cmd_idem(ctx);
    }
    if (qof->parsed()) {
      return cmd_qof(ctx);
    }
    if (genf->parsed()) {
      return cmd_gen_f(ctx);
    }
    if (reduce_cmd->parsed()) {
      dg::Presentation p = ctx.presentation();
      dg::Diagram d = dg::reduce(p, ctx.diagram(p, arg_d1));
      return emit_diagram(
          ctx, p, d, "reduced to " + std::to_string(dg::cells(d)) + " cells");
    }
    if (nf_cmd->parsed()) {
      dg::Presentation p = ctx.presentation();
      dg::Diagram d = dg::normal_form(p, ctx.diagram(p, arg_d1));
      return emit_diagram(ctx, p, d, "normal form");
    }
    if (eq->parsed()) {
      return cmd_eq(ctx, arg_d1, arg_d2);
    }
    if (mul->parsed()) {
      dg::Presentation p = ctx.presentation();
      dg::Diagram d = dg::reduce(
          p, dg::compose(p, ctx.diagram(p, arg_d1), ctx.diagram(p, arg_d2)));
      return emit_diagram(ctx, p, d, "product");
    }
    if (sum_cmd->parsed()) {
      dg::Presentation p = ctx.presentation();
      dg::Diagram d =
          dg::sum(p, ctx.diagram(p, arg_d1), ctx.diagram(p, arg_d2));
      return emit_diagram(ctx, p, d, "sum");
    }
    if (inv->parsed()) {
      dg::Presentation p = ctx.presentation();
      return emit_diagram(ctx, p, dg::inverse(p, ctx.diagram(p, arg_d1)),
                          "inverse");
    }
    if (conj->parsed()) {
      dg::Presentation p = ctx.presentation();
      dg::Diagram d =
          dg::conjugate(p, ctx.diagram(p, arg_d1), ctx.diagram(p, arg_d2));
      return emit_diagram(
          ctx, p, d, "conjugate over '" + p.display_word(d.top) + "'");
    }
    if (comp_cmd->parsed()) {
      return cmd_comp(ctx, arg_d1);
    }
    if (components->parsed()) {
      return cmd_components(ctx, arg_d1);
    }
    if (absred->parsed()) {
      return cmd_absred(ctx, arg_d1);
    }
    if (mu_cmd->parsed()) {
      return cmd_mu(ctx, arg_d1, arg_o1, arg_o2);
    }
    if (lemma1->parsed()) {
      return cmd_lemma1(ctx, arg_d1, arg_split);
    }
    if (embed->parsed()) {
      return cmd_embed_f(ctx, arg_w);
    }
    if (verify->parsed()) {
      return cmd_verify_f(ctx, arg_d1);
    }
    if (oracle_cmd->parsed()) {
      return cmd_oracle_check(ctx, arg_d1, arg_max_orbit);
    }
    if (dot->parsed()) {
      return cmd_dot(ctx, arg_d1);
    }
    std::cerr << "no command\n";
    return kUsage;
  } catch (const dg::ParseError& e) {
    std::cout << "FAIL " << e.what() << "\n";
    return kUsage;
  } catch (const dg::ExceededBounds& e) {
    std::cout << "UNKNOWN " << e.what() << "\n";
    return kCaps;
  } catch (const dg::StuckCyclicReduction& e) {
    std::cout << "UNKNOWN " << e.what() << "\n";
    return kCaps;
  } catch (const dg::InvalidDiagram& e) {
    std::cout << "FAIL " << e.what() << "\n";
    return kUsage;
  }
}
