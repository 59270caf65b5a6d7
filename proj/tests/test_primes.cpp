#include <doctest.h>

#include <set>

#include "mfn/analysis.hpp"
#include "mfn/primes.hpp"
#include "mfn/setops.hpp"

using namespace mfn;

TEST_CASE("prime divisor examples") {
  CHECK(prime_divisors(12) == std::vector<std::uint64_t>{2, 3});
  CHECK(prime_divisors(1).empty());
  CHECK(prime_divisors(97) == std::vector<std::uint64_t>{97});
  CHECK(prime_divisors(2 * 3 * 5 * 7) ==
        std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK_THROWS_AS(prime_divisors(0), bad_argument);
}

TEST_CASE("factorization examples and round trip") {
  const ExponentVector twelve = factor_exponents(12);
  CHECK(twelve.factors ==
        std::vector<std::pair<std::uint64_t, std::uint32_t>>{{2, 2}, {3, 1}});
  CHECK(factor_exponents(1).factors.empty());
  CHECK_THROWS_AS(factor_exponents(0), bad_argument);

  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const ExponentVector ev = factor_exponents(n);
    CHECK(ev.reconstruct() == n);
    std::vector<std::uint64_t> support;
    for (auto [p, e] : ev.factors) {
      CHECK(e >= 1);
      support.push_back(p);
    }
    CHECK(support == prime_divisors(n));
  }
}

TEST_CASE("window sieve") {
  const PrimeWindow w(100);
  CHECK(w.is_prime(2));
  CHECK(w.is_prime(97));
  CHECK(!w.is_prime(91));
  CHECK(w.primes().size() == 25);
  CHECK(w.divisors_of(60) == std::vector<std::uint64_t>{2, 3, 5});
  CHECK_THROWS_AS(PrimeWindow(1), bad_argument);
  CHECK_THROWS_AS(w.divisors_of(101), bad_argument);
  // Primality probes outside the window fall back to trial division.
  CHECK(w.is_prime(101));
  CHECK(!w.is_prime(1001));
}

TEST_CASE("window image and preimage of named sets") {
  const PrimeWindow w(100);

  const auto even_hits = prime_minus(IntegerSet::evens(), w);
  std::vector<std::uint64_t> evens;
  for (std::uint64_t n = 2; n <= 100; n += 2) evens.push_back(n);
  CHECK(even_hits == evens);

  const auto odd_hits = prime_minus(IntegerSet::odds(), w);
  std::set<std::uint64_t> missing;
  for (std::uint64_t n = 2; n <= 100; ++n) missing.insert(n);
  for (std::uint64_t n : odd_hits) missing.erase(n);
  CHECK(std::vector<std::uint64_t>(missing.begin(), missing.end()) ==
        std::vector<std::uint64_t>{2, 4, 8, 16, 32, 64});

  const PrimeWindow w30(30);
  CHECK(prime_plus(IntegerSet::explicit_set({2, 3}), w30) ==
        std::vector<std::uint64_t>{2, 3, 4, 6, 8, 9, 12, 16, 18, 24, 27});
  CHECK(prime_plus(IntegerSet::all_primes(), w30).size() == 29);
}

TEST_CASE("leaf examples") {
  CHECK(prime_leaf(2, PrimeWindow(100)) ==
        std::vector<std::uint64_t>{2, 4, 8, 16, 32, 64});
  CHECK(prime_leaf(3, PrimeWindow(30)) ==
        std::vector<std::uint64_t>{3, 9, 27});
  CHECK(prime_leaf(101, PrimeWindow(100)).empty());
  CHECK_THROWS_AS(prime_leaf(4, PrimeWindow(100)), bad_argument);
}

TEST_CASE("cofinite wall membership") {
  CHECK(wall_aleph0_contains(SetDescription::all_primes()));
  CHECK(wall_aleph0_contains(SetDescription::all_naturals()));
  CHECK(!wall_aleph0_contains(SetDescription::evens()));
  CHECK(!wall_aleph0_contains(SetDescription::odds()));
  CHECK(!wall_aleph0_contains(SetDescription::all_primes_minus({2})));
  CHECK(wall_aleph0_contains(SetDescription::all_primes_minus({4, 9})));
  CHECK(!wall_aleph0_contains(SetDescription::explicit_set({2, 3, 5, 7})));
  CHECK(wall_aleph0_contains(SetDescription::cofinite({1, 4, 9})));
  CHECK(!wall_aleph0_contains(SetDescription::cofinite({5})));

  CHECK(wall_aleph0_contains(SetDescription::parse("all-primes")));
  CHECK(!wall_aleph0_contains(SetDescription::parse("evens")));
  CHECK(!wall_aleph0_contains(SetDescription::parse("2,3,5")));
  CHECK(wall_aleph0_contains(SetDescription::parse("complement:4,6")));
  CHECK(!wall_aleph0_contains(SetDescription::parse("all-primes-minus:3")));
  CHECK_THROWS_AS(SetDescription::parse("everything"), bad_argument);
  CHECK_THROWS_AS(SetDescription::parse("complement:x"), bad_argument);
}

TEST_CASE("the missing-prime rule matches a bounded escape scan") {
  // Dropping one prime from the set leaves a constant fraction of every
  // window outside the small preimage; keeping every prime leaves nothing.
  const PrimeWindow w(20000);
  CHECK(prime_plus(IntegerSet::all_primes(), w).size() == w.bound() - 1);

  const auto kept = prime_plus(IntegerSet::odds(), w);  // misses 2
  const std::uint64_t escaped = (w.bound() - 1) - kept.size();
  CHECK(escaped >= (w.bound() - 1) / 2);  // at least the even numbers escape
}

TEST_CASE("windowed multifunction matches the window operators") {
  const PrimeWindow w(500);
  const MultiFunction f = prime_multifunction(w);
  CHECK(classify(f).undirected);
  CHECK(classify(f).loopless);

  // Row of a composite lists its prime divisors; row of a prime lists its
  // proper multiples.
  CHECK(f(w.vertex_of(60)).elements() ==
        std::vector<Vertex>{w.vertex_of(2), w.vertex_of(3), w.vertex_of(5)});
  const auto row7 = f(w.vertex_of(7)).elements();
  CHECK(row7.front() == w.vertex_of(14));
  CHECK(row7.size() == 500 / 7 - 1);

  // Composite rows agree with the divisor-set reading, so the generic
  // preimage operators reproduce the window scans on composites.
  VertexSet primes_23(f.universe());
  primes_23.insert(w.vertex_of(2)).insert(w.vertex_of(3));
  const IntegerSet set_23 = IntegerSet::explicit_set({2, 3});

  const VertexSet meets = preimage_complete(f, primes_23);
  const VertexSet inside = preimage_small(f, primes_23);
  std::set<std::uint64_t> minus_scan;
  for (std::uint64_t n : prime_minus(set_23, w)) minus_scan.insert(n);
  std::set<std::uint64_t> plus_scan;
  for (std::uint64_t n : prime_plus(set_23, w)) plus_scan.insert(n);
  for (std::uint64_t n = 2; n <= w.bound(); ++n) {
    if (w.is_prime(n)) continue;
    CHECK(meets.contains(w.vertex_of(n)) == (minus_scan.count(n) > 0));
    CHECK(inside.contains(w.vertex_of(n)) == (plus_scan.count(n) > 0));
  }

  // Complement duality of the preimage pair holds on the windowed relation.
  CHECK(preimage_complete(f, primes_23.complement()) ==
        preimage_small(f, primes_23).complement());

  // The small preimage of {p} restricted to composites is the leaf set
  // without the base prime itself.
  for (std::uint64_t p : {2, 3, 5}) {
    VertexSet single(f.universe());
    single.insert(w.vertex_of(p));
    const VertexSet small = preimage_small(f, single);
    std::set<std::uint64_t> got;
    for (Vertex v : small.elements())
      if (!w.is_prime(w.integer_of(v))) got.insert(w.integer_of(v));
    std::set<std::uint64_t> leaves;
    for (std::uint64_t q : prime_leaf(p, w))
      if (q != p) leaves.insert(q);
    CHECK(got == leaves);
  }
}

TEST_CASE("principal leaf walls are Cauchy on the windowed graph") {
  const PrimeWindow w(200);
  const MultiFunction f = prime_multifunction(w);
  for (std::uint64_t p : {2, 3, 5}) {
    VertexSet leaves(f.universe());
    for (std::uint64_t q : prime_leaf(p, w))
      if (q != p) leaves.insert(w.vertex_of(q));
    VertexSet single(f.universe());
    single.insert(w.vertex_of(p));
    // {p} belongs to the wall family of the leaf set, and has diameter 0,
    // which is the Cauchy witness.  The family itself is too large to
    // enumerate at this universe size.
    CHECK(leaves.subset_of(preimage_small(f, single)));
    CHECK(diameter(f, single) == Distance{0});
  }
}
