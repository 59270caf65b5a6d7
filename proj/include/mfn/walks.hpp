#ifndef MFN_WALKS_HPP
#define MFN_WALKS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "mfn/core.hpp"

namespace mfn {

// A finite word over the vertex alphabet; the empty vector is the empty word.
using Word = std::vector<Vertex>;

struct WalkQuery {
  Vertex from = 0;
  Vertex to = 0;
  std::uint32_t length = 0;  // number of edges
};

inline constexpr std::uint32_t kDefaultWalkCap = 12;

Word concat(const Word& a, const Word& b);

// Drop the last letter; the empty word maps to itself.
Word tail(const Word& a);

Word reverse(const Word& a);

// 1-based letter access; out-of-range positions yield the epsilon marker.
std::optional<Vertex> letter(const Word& a, std::size_t n);

// A nonempty word is a walk when every letter lies in F of its successor.
bool is_walk(const MultiFunction& f, const Word& a);

// All walks matching the query, in lexicographic order.  The length is
// capped because the search space grows as |V|^(length+1).
std::vector<Word> enumerate_walks(const MultiFunction& f, const WalkQuery& q,
                                  std::uint32_t cap = kDefaultWalkCap);

// Uncapped decision procedure: iterates the image operator instead of
// materializing words.
bool walk_exists(const MultiFunction& f, const WalkQuery& q);

}  // namespace mfn

#endif  // MFN_WALKS_HPP
