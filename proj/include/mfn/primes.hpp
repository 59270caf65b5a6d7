#ifndef MFN_PRIMES_HPP
#define MFN_PRIMES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "mfn/core.hpp"

namespace mfn {

// The bounded model of the prime-divisor multifunction: integers 2..bound,
// with a sieve computed once at construction.
class PrimeWindow {
 public:
  explicit PrimeWindow(std::uint64_t bound);

  std::uint64_t bound() const { return bound_; }
  bool contains(std::uint64_t n) const { return n >= 2 && n <= bound_; }
  bool is_prime(std::uint64_t n) const;
  const std::vector<std::uint64_t>& primes() const { return primes_; }

  // Window integers map onto universe indices: n <-> n - 2.
  VertexUniverse universe() const;
  Vertex vertex_of(std::uint64_t n) const;
  std::uint64_t integer_of(Vertex v) const;

  // Prime divisors of a window integer via the sieve.
  std::vector<std::uint64_t> divisors_of(std::uint64_t n) const;

 private:
  std::uint64_t bound_;
  std::vector<std::uint32_t> smallest_factor_;  // index n, 0..bound
  std::vector<std::uint64_t> primes_;
};

// Unique factorization as (prime, exponent) pairs with ascending primes
// and positive exponents; empty for n = 1.
struct ExponentVector {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> factors;

  std::uint64_t reconstruct() const;

  friend bool operator==(const ExponentVector&, const ExponentVector&) =
      default;
};

// A set of integers given either explicitly or by name; only prime
// membership is ever queried by the window operators.
class IntegerSet {
 public:
  static IntegerSet explicit_set(std::vector<std::uint64_t> values);
  static IntegerSet evens();
  static IntegerSet odds();
  static IntegerSet all_primes();

  bool contains(std::uint64_t n) const;

 private:
  enum class Kind { explicit_set, evens, odds, primes };
  explicit IntegerSet(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<std::uint64_t> values_;  // sorted, for explicit sets
};

// A description of a subset of the naturals rich enough to decide
// whether it contains every prime.
class SetDescription {
 public:
  static SetDescription explicit_set(std::vector<std::uint64_t> values);
  // Complement of a finite set.
  static SetDescription cofinite(std::vector<std::uint64_t> removed);
  static SetDescription evens();
  static SetDescription odds();
  static SetDescription all_primes();
  static SetDescription all_primes_minus(std::vector<std::uint64_t> removed);
  static SetDescription all_naturals();

  // Grammar: "2,3,5" | "complement:2,3" | "evens" | "odds" | "all-primes"
  // | "all-primes-minus:2" | "all-naturals".
  static SetDescription parse(const std::string& text);

  bool contains_every_prime() const;

 private:
  enum class Kind {
    explicit_set,
    cofinite,
    evens,
    odds,
    all_primes,
    all_primes_minus,
    all_naturals,
  };
  explicit SetDescription(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::vector<std::uint64_t> values_;
};

// Exact prime divisor set; 1 has none.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

ExponentVector factor_exponents(std::uint64_t n);

// Window integers all of whose prime divisors lie in U.
std::vector<std::uint64_t> prime_plus(const IntegerSet& u,
                                      const PrimeWindow& w);

// Window integers with at least one prime divisor in U.
std::vector<std::uint64_t> prime_minus(const IntegerSet& u,
                                       const PrimeWindow& w);

// Powers of p inside the window, exponent at least one; p must be prime.
std::vector<std::uint64_t> prime_leaf(std::uint64_t p, const PrimeWindow& w);

// Whether U belongs to the cofinite wall family of the prime-divisor
// multifunction over the unbounded naturals.  Membership reduces to U
// containing every prime: a missing prime puts all of its multiples
// outside the small preimage, which is then infinite.
bool wall_aleph0_contains(const SetDescription& u);

// The symmetrized loopless prime-divisor multifunction on the window:
// each integer relates to its prime divisors and, when prime, to its
// proper multiples.
MultiFunction prime_multifunction(const PrimeWindow& w);

}  // namespace mfn

#endif  // MFN_PRIMES_HPP
