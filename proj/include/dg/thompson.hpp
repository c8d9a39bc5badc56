#ifndef DG_THOMPSON_HPP
#define DG_THOMPSON_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "dg/groupops.hpp"
#include "dg/rewrite.hpp"

namespace dg {

// <x | xx = x>: one letter, one relation.
Presentation dunce_hat();

// The canonical generating pair of F as reduced (x,x)-diagrams over the
// dunce hat: Y0 = [B@0, B@0, F@1, F@0], Y1 = [B@0, B@1, B@1, F@2, F@1, F@0].
std::pair<Diagram, Diagram> f_generators();

// x_0 = reduce(y0), x_1 = reduce(y1), x_{i+1} = x_i conjugated by x_0.
std::vector<Diagram> x_family(const Presentation& p, const Diagram& y0,
                              const Diagram& y1, int upto);
Diagram x_gen(const Presentation& p, int i, const Diagram& y0,
              const Diagram& y1);

struct PairReport {
  bool rel1_ok = false;     // x2 conjugated by x1 equals x3
  bool rel2_ok = false;     // x3 conjugated by x1 equals x4
  bool noncommute = false;  // y0·y1 differs from y1·y0
  std::array<std::size_t, 5> x_cells{};  // reduced cell counts of x0..x4
  bool pass() const { return rel1_ok && rel2_ok && noncommute; }
};

// Decides whether the ordered pair generates F canonically: the two defining
// relations hold as reduced diagrams and the pair does not commute. Since
// every proper quotient of F is abelian, a passing report is a finite
// certificate that <y0, y1> is a copy of F.
PairReport verify_canonical_pair(const Presentation& p, const Diagram& y0,
                                 const Diagram& y1);

// Pushes a diagram over the dunce hat through the substitution x -> e,
// replacing each xx->x cell by a copy of E (an (e·e, e)-diagram over p)
// shifted to the matching block, and each x->xx cell by the mirror of E.
// A dunce-hat (x^m, x^n)-diagram becomes an (e^m, e^n)-diagram over p.
Diagram substitution_hom(const Presentation& p, const Diagram& big_e,
                         const Diagram& d);

struct IdempotentWitness {
  Word e;
  Word w1, w2;            // possibly empty
  Derivation cert_idem;   // replays e·e into e
  Derivation cert_factor; // replays w into w1·e·w2
};

struct EmbeddingWitness {
  IdempotentWitness witness;
  Diagram y0, y1;  // spherical over base w
  PairReport report;
};

struct EmbedOutcome {
  std::optional<EmbeddingWitness> witness;
  // True when the idempotent enumeration was exhaustive and found nothing:
  // the semigroup has no idempotent up to the length bound with decisive
  // verdicts throughout, so the absence of a witness is not a cap artifact.
  bool decisive_absence = false;
};

// Theorem-3 pipeline: find an idempotent e with certificate, a bounded
// derivation w => w1·e·w2, and build the generating pair
//   Y_i = reduce(Gamma · (1_{w1} + substitution_hom(E, Y_i) + 1_{w2}) ·
//         Gamma^-1)
// returning a witness only when verify_canonical_pair passes. Absence of a
// witness is not a proof of absence unless decisive_absence is set.
EmbedOutcome embed_f(const Presentation& p, const Word& w,
                     std::int32_t max_idem_len = 4, Caps caps = {});

std::string serialize_witness(const Presentation& p, const Word& w,
                              const EmbeddingWitness& ew);

struct WitnessVerification {
  bool hash_ok = false;
  bool idem_ok = false;     // cert replays e·e into e
  bool factor_ok = false;   // cert replays w into w1·e·w2
  bool rebuild_ok = false;  // stored pair equals the reconstructed pair
  PairReport report;
  bool pass() const {
    return hash_ok && idem_ok && factor_ok && rebuild_ok && report.pass();
  }
};

WitnessVerification verify_witness(const Presentation& p,
                                   const std::string& text);

// Parsed form, for tooling that wants the pieces.
struct ParsedWitness {
  std::uint64_t presentation_hash = 0;
  Word w;
  EmbeddingWitness data;
};
ParsedWitness parse_witness(const Presentation& p, const std::string& text);

}  // namespace dg

#endif  // DG_THOMPSON_HPP
