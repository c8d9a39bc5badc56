#ifndef DG_WORD_HPP
#define DG_WORD_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace dg {

using SymbolId = std::int32_t;

// A word over a presentation's alphabet, stored as symbol indices.
using Word = std::vector<SymbolId>;

// Length-first, then lexicographic in symbol index (the order induced by the
// alphabet order of the presentation).
bool shortlex_less(const Word& a, const Word& b);

bool matches_at(const Word& w, const Word& pattern, std::size_t offset);

// Replace w[offset, offset+count) by `replacement`.
Word splice(const Word& w, std::size_t offset, std::size_t count,
            const Word& replacement);

// Offset of the first occurrence of `factor` in w, or -1 if absent.
// The empty factor occurs at offset 0.
std::ptrdiff_t find_factor(const Word& w, const Word& factor);

std::uint64_t fnv1a64(const void* data, std::size_t len,
                      std::uint64_t seed = 1469598103934665603ULL);

}  // namespace dg

#endif  // DG_WORD_HPP
