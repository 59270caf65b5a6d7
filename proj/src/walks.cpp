#include "mfn/walks.hpp"

#include <algorithm>

#include "mfn/setops.hpp"

namespace mfn {

Word concat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Word tail(const Word& a) {
  if (a.empty()) return a;
  return Word(a.begin(), a.end() - 1);
}

Word reverse(const Word& a) {
  Word out(a.rbegin(), a.rend());
  return out;
}

std::optional<Vertex> letter(const Word& a, std::size_t n) {
  if (n == 0 || n > a.size()) return std::nullopt;
  return a[n - 1];
}

bool is_walk(const MultiFunction& f, const Word& a) {
  if (a.empty()) throw empty_argument("the empty word is not a walk");
  for (Vertex v : a)
    if (!f.universe().contains(v))
      throw bad_argument("word letter outside universe");
  for (std::size_t i = 0; i + 1 < a.size(); ++i)
    if (!f(a[i + 1]).contains(a[i])) return false;
  return true;
}

std::vector<Word> enumerate_walks(const MultiFunction& f, const WalkQuery& q,
                                  std::uint32_t cap) {
  if (!f.universe().contains(q.from) || !f.universe().contains(q.to))
    throw universe_mismatch("walk endpoint outside universe");
  if (q.length > cap)
    throw cap_exceeded("walk length exceeds the enumeration cap");

  // A letter x may follow letter v exactly when v lies in F(x).
  const MultiFunction successors = invert(f);

  std::vector<Word> out;
  Word word;
  word.reserve(q.length + 1);
  word.push_back(q.from);

  auto extend = [&](auto&& self) -> void {
    if (word.size() == static_cast<std::size_t>(q.length) + 1) {
      if (word.back() == q.to) out.push_back(word);
      return;
    }
    for (Vertex x : successors(word.back()).elements()) {
      word.push_back(x);
      self(self);
      word.pop_back();
    }
  };
  extend(extend);
  return out;
}

bool walk_exists(const MultiFunction& f, const WalkQuery& q) {
  if (!f.universe().contains(q.from) || !f.universe().contains(q.to))
    throw universe_mismatch("walk endpoint outside universe");
  VertexSet frontier(f.universe());
  frontier.insert(q.to);
  for (std::uint32_t step = 0; step < q.length; ++step)
    frontier = image_union(f, frontier);
  return frontier.contains(q.from);
}

}  // namespace mfn
