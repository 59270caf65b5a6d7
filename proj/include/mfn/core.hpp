#ifndef MFN_CORE_HPP
#define MFN_CORE_HPP

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <string>
#include <vector>

#include <boost/container/small_vector.hpp>

#include "mfn/errors.hpp"

namespace mfn {

using Vertex = std::uint32_t;

// A fixed, nonempty, finite set of vertices identified by 0-based indices.
// An optional name table may be attached for display; it never takes part
// in semantics, and two universes compare equal iff their sizes do.
class VertexUniverse {
 public:
  explicit VertexUniverse(std::uint32_t size);
  VertexUniverse(std::uint32_t size, std::vector<std::string> names);

  std::uint32_t size() const { return size_; }
  bool contains(Vertex v) const { return v < size_; }

  // Display label: the attached name, or the decimal index.
  std::string label(Vertex v) const;

  friend bool operator==(const VertexUniverse& a, const VertexUniverse& b) {
    return a.size_ == b.size_;
  }
  friend bool operator!=(const VertexUniverse& a, const VertexUniverse& b) {
    return !(a == b);
  }

 private:
  std::uint32_t size_;
  std::shared_ptr<const std::vector<std::string>> names_;
};

// A subset of one universe, stored as a dense bitset.  Word storage is
// inline for universes up to 128 vertices, which keeps the whole
// set algebra allocation-free at the sizes the exhaustive tests sweep.
class VertexSet {
 public:
  explicit VertexSet(VertexUniverse universe);
  VertexSet(VertexUniverse universe, std::initializer_list<Vertex> members);

  static VertexSet full(const VertexUniverse& universe);

  const VertexUniverse& universe() const { return universe_; }

  bool contains(Vertex v) const;
  VertexSet& insert(Vertex v);
  VertexSet& erase(Vertex v);

  std::size_t count() const;
  bool empty() const;
  bool is_full() const { return count() == universe_.size(); }

  VertexSet complement() const;
  bool subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  // Members in ascending order.
  std::vector<Vertex> elements() const;
  // Smallest member; set must be nonempty.
  Vertex min() const;

  // Visit members in ascending order without materializing them.
  template <typename Fn>
  void for_each(Fn&& visit) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      std::uint64_t w = words_[i];
      while (w) {
        visit(static_cast<Vertex>(i * 64 + __builtin_ctzll(w)));
        w &= w - 1;
      }
    }
  }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);

  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet& a, const VertexSet& b);
  friend bool operator!=(const VertexSet& a, const VertexSet& b) {
    return !(a == b);
  }

  // Canonical family order: by cardinality, then lexicographically on the
  // ascending member sequence.  Keeps set families deterministic.
  static bool family_less(const VertexSet& a, const VertexSet& b);

 private:
  using Words = boost::container::small_vector<std::uint64_t, 2>;

  void check_same_universe(const VertexSet& other) const;
  void trim_tail();

  VertexUniverse universe_;
  Words words_;
};

// A total assignment of one vertex set per vertex: the set-valued map F,
// equivalently a binary relation or directed graph on the universe.
class MultiFunction {
 public:
  // All rows empty: the trivial multifunction.
  explicit MultiFunction(VertexUniverse universe);

  // Every vertex maps to the same set.
  static MultiFunction constant(const VertexUniverse& universe,
                                const VertexSet& value);
  // Every vertex maps to its own singleton (the diagonal relation).
  static MultiFunction identity(const VertexUniverse& universe);

  const VertexUniverse& universe() const { return universe_; }

  const VertexSet& operator()(Vertex v) const;
  MultiFunction& set_row(Vertex v, VertexSet row);
  // Insert `target` into F(v).
  MultiFunction& add(Vertex v, Vertex target);

  friend bool operator==(const MultiFunction& a, const MultiFunction& b);
  friend bool operator!=(const MultiFunction& a, const MultiFunction& b) {
    return !(a == b);
  }

 private:
  VertexUniverse universe_;
  std::vector<VertexSet> rows_;
};

// Classification flags of a multifunction; one bool per defining condition.
struct PropertyReport {
  bool strict = false;
  bool nontrivial = false;
  bool undirected = false;
  bool oriented = false;
  bool total = false;
  bool everywhereloop = false;
  bool loopless = false;
  bool simple_graph = false;
  bool orgraph = false;
  bool transitive = false;
};

enum class SetOp { union_op, intersection, difference };

// result(y) = {x | y in F(x)}; an involution.
MultiFunction invert(const MultiFunction& f);

// Pointwise complement of every row; an involution.
MultiFunction complement(const MultiFunction& f);

// Pointwise set operation; both arguments must share a universe.
MultiFunction combine(const MultiFunction& f, const MultiFunction& g,
                      SetOp op);

PropertyReport classify(const MultiFunction& f);

// Vertices with a nonempty row.
VertexSet domain(const MultiFunction& f);
// Union of all rows.
VertexSet codomain(const MultiFunction& f);

}  // namespace mfn

#endif  // MFN_CORE_HPP
