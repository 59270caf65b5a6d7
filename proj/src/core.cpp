#include "mfn/core.hpp"

#include <algorithm>
#include <bit>

namespace mfn {

namespace {

constexpr std::uint32_t kWordBits = 64;

std::size_t words_for(std::uint32_t size) {
  return (static_cast<std::size_t>(size) + kWordBits - 1) / kWordBits;
}

}  // namespace

VertexUniverse::VertexUniverse(std::uint32_t size) : size_(size) {
  if (size == 0) throw bad_argument("vertex universe must be nonempty");
}

VertexUniverse::VertexUniverse(std::uint32_t size,
                               std::vector<std::string> names)
    : VertexUniverse(size) {
  if (names.size() != size)
    throw bad_argument("name table size does not match universe size");
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

std::string VertexUniverse::label(Vertex v) const {
  if (!contains(v)) throw bad_argument("vertex outside universe");
  if (names_) return (*names_)[v];
  return std::to_string(v);
}

VertexSet::VertexSet(VertexUniverse universe)
    : universe_(universe), words_(words_for(universe.size()), 0) {}

VertexSet::VertexSet(VertexUniverse universe,
                     std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(const VertexUniverse& universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~std::uint64_t{0};
  s.trim_tail();
  return s;
}

void VertexSet::trim_tail() {
  const std::uint32_t used = universe_.size() % kWordBits;
  if (used != 0) words_.back() &= (std::uint64_t{1} << used) - 1;
}

void VertexSet::check_same_universe(const VertexSet& other) const {
  if (universe_ != other.universe_)
    throw universe_mismatch("vertex sets from different universes");
}

bool VertexSet::contains(Vertex v) const {
  if (!universe_.contains(v)) return false;
  return (words_[v / kWordBits] >> (v % kWordBits)) & 1u;
}

VertexSet& VertexSet::insert(Vertex v) {
  if (!universe_.contains(v)) throw bad_argument("vertex outside universe");
  words_[v / kWordBits] |= std::uint64_t{1} << (v % kWordBits);
  return *this;
}

VertexSet& VertexSet::erase(Vertex v) {
  if (!universe_.contains(v)) throw bad_argument("vertex outside universe");
  words_[v / kWordBits] &= ~(std::uint64_t{1} << (v % kWordBits));
  return *this;
}

std::size_t VertexSet::count() const {
  std::size_t n = 0;
  for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool VertexSet::empty() const {
  for (auto w : words_)
    if (w != 0) return false;
  return true;
}

VertexSet VertexSet::complement() const {
  VertexSet r(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] = ~words_[i];
  r.trim_tail();
  return r;
}

bool VertexSet::subset_of(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & other.words_[i]) return true;
  return false;
}

std::vector<Vertex> VertexSet::elements() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    std::uint64_t w = words_[i];
    while (w) {
      const int bit = std::countr_zero(w);
      out.push_back(static_cast<Vertex>(i * kWordBits + bit));
      w &= w - 1;
    }
  }
  return out;
}

Vertex VertexSet::min() const {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0)
      return static_cast<Vertex>(i * kWordBits + std::countr_zero(words_[i]));
  throw empty_argument("min of empty vertex set");
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_same_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

bool operator==(const VertexSet& a, const VertexSet& b) {
  if (a.universe_ != b.universe_) return false;
  return a.words_ == b.words_;
}

bool VertexSet::family_less(const VertexSet& a, const VertexSet& b) {
  const std::size_t ca = a.count(), cb = b.count();
  if (ca != cb) return ca < cb;
  // With equal cardinalities, comparing the sorted member sequences
  // lexicographically amounts to asking who holds the lowest differing
  // vertex.
  for (std::size_t i = 0; i < a.words_.size(); ++i) {
    const std::uint64_t diff = a.words_[i] ^ b.words_[i];
    if (diff) return a.words_[i] & (diff & -diff);
  }
  return false;
}

MultiFunction::MultiFunction(VertexUniverse universe)
    : universe_(universe), rows_(universe.size(), VertexSet(universe)) {}

MultiFunction MultiFunction::constant(const VertexUniverse& universe,
                                      const VertexSet& value) {
  if (value.universe() != universe)
    throw universe_mismatch("constant value from a different universe");
  MultiFunction f(universe);
  for (auto& row : f.rows_) row = value;
  return f;
}

MultiFunction MultiFunction::identity(const VertexUniverse& universe) {
  MultiFunction f(universe);
  for (Vertex v = 0; v < universe.size(); ++v) f.rows_[v].insert(v);
  return f;
}

const VertexSet& MultiFunction::operator()(Vertex v) const {
  if (!universe_.contains(v)) throw bad_argument("vertex outside universe");
  return rows_[v];
}

MultiFunction& MultiFunction::set_row(Vertex v, VertexSet row) {
  if (!universe_.contains(v)) throw bad_argument("vertex outside universe");
  if (row.universe() != universe_)
    throw universe_mismatch("row from a different universe");
  rows_[v] = std::move(row);
  return *this;
}

MultiFunction& MultiFunction::add(Vertex v, Vertex target) {
  if (!universe_.contains(v)) throw bad_argument("vertex outside universe");
  rows_[v].insert(target);
  return *this;
}

bool operator==(const MultiFunction& a, const MultiFunction& b) {
  return a.universe_ == b.universe_ && a.rows_ == b.rows_;
}

MultiFunction invert(const MultiFunction& f) {
  MultiFunction r(f.universe());
  for (Vertex v = 0; v < f.universe().size(); ++v)
    f(v).for_each([&](Vertex u) { r.add(u, v); });
  return r;
}

MultiFunction complement(const MultiFunction& f) {
  MultiFunction r(f.universe());
  for (Vertex v = 0; v < f.universe().size(); ++v)
    r.set_row(v, f(v).complement());
  return r;
}

MultiFunction combine(const MultiFunction& f, const MultiFunction& g,
                      SetOp op) {
  if (f.universe() != g.universe())
    throw universe_mismatch("combining multifunctions over different universes");
  MultiFunction r(f.universe());
  for (Vertex v = 0; v < f.universe().size(); ++v) {
    switch (op) {
      case SetOp::union_op:
        r.set_row(v, f(v) | g(v));
        break;
      case SetOp::intersection:
        r.set_row(v, f(v) & g(v));
        break;
      case SetOp::difference:
        r.set_row(v, f(v) - g(v));
        break;
    }
  }
  return r;
}

PropertyReport classify(const MultiFunction& f) {
  const std::uint32_t n = f.universe().size();
  PropertyReport rep;

  rep.strict = true;
  rep.nontrivial = false;
  rep.everywhereloop = true;
  rep.loopless = true;
  for (Vertex v = 0; v < n; ++v) {
    if (f(v).empty()) rep.strict = false;
    if (!f(v).empty()) rep.nontrivial = true;
    if (!f(v).contains(v)) rep.everywhereloop = false;
    if (f(v).contains(v)) rep.loopless = false;
  }

  const MultiFunction inv = invert(f);
  rep.undirected = (f == inv);

  rep.oriented = true;
  rep.total = true;
  for (Vertex v = 0; v < n; ++v) {
    if (f(v).intersects(inv(v))) rep.oriented = false;
    if (!(f(v) | inv(v)).is_full()) rep.total = false;
  }

  rep.simple_graph = rep.loopless && rep.undirected;
  rep.orgraph = rep.loopless && rep.oriented;

  // u in F(v) and v in F(w) must imply u in F(w); rowwise this is
  // union of F over F(w) contained in F(w).
  rep.transitive = true;
  for (Vertex w = 0; w < n && rep.transitive; ++w) {
    VertexSet reach(f.universe());
    f(w).for_each([&](Vertex v) { reach |= f(v); });
    if (!reach.subset_of(f(w))) rep.transitive = false;
  }

  return rep;
}

VertexSet domain(const MultiFunction& f) {
  VertexSet d(f.universe());
  for (Vertex v = 0; v < f.universe().size(); ++v)
    if (!f(v).empty()) d.insert(v);
  return d;
}

VertexSet codomain(const MultiFunction& f) {
  VertexSet c(f.universe());
  for (Vertex v = 0; v < f.universe().size(); ++v) c |= f(v);
  return c;
}

}  // namespace mfn
