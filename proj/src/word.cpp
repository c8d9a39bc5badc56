#include "dg/word.hpp"

#include <algorithm>

namespace dg {

bool shortlex_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) {
    return a.size() < b.size();
  }
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

bool matches_at(const Word& w, const Word& pattern, std::size_t offset) {
  if (offset + pattern.size() > w.size()) {
    return false;
  }
  return std::equal(pattern.begin(), pattern.end(), w.begin() + offset);
}

Word splice(const Word& w, std::size_t offset, std::size_t count,
            const Word& replacement) {
  Word out;
  out.reserve(w.size() - count + replacement.size());
  out.insert(out.end(), w.begin(), w.begin() + offset);
  out.insert(out.end(), replacement.begin(), replacement.end());
  out.insert(out.end(), w.begin() + offset + count, w.end());
  return out;
}

std::ptrdiff_t find_factor(const Word& w, const Word& factor) {
  if (factor.empty()) {
    return 0;
  }
  if (factor.size() > w.size()) {
    return -1;
  }
  for (std::size_t i = 0; i + factor.size() <= w.size(); ++i) {
    if (matches_at(w, factor, i)) {
      return static_cast<std::ptrdiff_t>(i);
    }
  }
  return -1;
}

std::uint64_t fnv1a64(const void* data, std::size_t len, std::uint64_t seed) {
  const unsigned char* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 1099511628211ULL;
  }
  return h;
}

}  // namespace dg
