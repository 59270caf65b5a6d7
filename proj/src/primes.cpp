#include "mfn/primes.hpp"

#include <algorithm>
#include <cctype>
#include <string>

namespace mfn {

namespace {

constexpr std::uint64_t kWindowCap = 10'000'000;

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::uint64_t> parse_number_list(const std::string& text) {
  std::vector<std::uint64_t> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t used = 0;
    std::uint64_t value = 0;
    try {
      value = std::stoull(text.substr(pos), &used);
    } catch (const std::exception&) {
      throw bad_argument("unreadable integer in set description");
    }
    out.push_back(value);
    pos += used;
    if (pos < text.size()) {
      if (text[pos] != ',')
        throw bad_argument("set description integers must be comma separated");
      ++pos;
    }
  }
  if (out.empty()) throw bad_argument("empty integer list in set description");
  return out;
}

}  // namespace

PrimeWindow::PrimeWindow(std::uint64_t bound) : bound_(bound) {
  if (bound < 2) throw bad_argument("prime window bound must be at least 2");
  if (bound > kWindowCap) throw cap_exceeded("prime window bound too large");
  smallest_factor_.assign(bound + 1, 0);
  for (std::uint64_t n = 2; n <= bound; ++n) {
    if (smallest_factor_[n] != 0) continue;
    primes_.push_back(n);
    for (std::uint64_t m = n; m <= bound; m += n)
      if (smallest_factor_[m] == 0)
        smallest_factor_[m] = static_cast<std::uint32_t>(n);
  }
}

bool PrimeWindow::is_prime(std::uint64_t n) const {
  if (!contains(n)) return trial_division_prime(n);
  return smallest_factor_[n] == n;
}

VertexUniverse PrimeWindow::universe() const {
  return VertexUniverse(static_cast<std::uint32_t>(bound_ - 1));
}

Vertex PrimeWindow::vertex_of(std::uint64_t n) const {
  if (!contains(n)) throw bad_argument("integer outside the prime window");
  return static_cast<Vertex>(n - 2);
}

std::uint64_t PrimeWindow::integer_of(Vertex v) const {
  if (v + 2ull > bound_) throw bad_argument("vertex outside the prime window");
  return v + 2ull;
}

std::vector<std::uint64_t> PrimeWindow::divisors_of(std::uint64_t n) const {
  if (!contains(n)) throw bad_argument("integer outside the prime window");
  std::vector<std::uint64_t> out;
  while (n > 1) {
    const std::uint64_t p = smallest_factor_[n];
    out.push_back(p);
    while (n % p == 0) n /= p;
  }
  return out;
}

std::uint64_t ExponentVector::reconstruct() const {
  std::uint64_t n = 1;
  for (auto [p, e] : factors)
    for (std::uint32_t i = 0; i < e; ++i) n *= p;
  return n;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  if (n == 0) throw bad_argument("prime divisors need a positive integer");
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) out.push_back(n);
  return out;
}

ExponentVector factor_exponents(std::uint64_t n) {
  if (n == 0) throw bad_argument("factorization needs a positive integer");
  ExponentVector out;
  for (std::uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2))
    if (n % p == 0) {
      std::uint32_t e = 0;
      while (n % p == 0) {
        n /= p;
        ++e;
      }
      out.factors.emplace_back(p, e);
    }
  if (n > 1) out.factors.emplace_back(n, 1);
  return out;
}

IntegerSet IntegerSet::explicit_set(std::vector<std::uint64_t> values) {
  IntegerSet s(Kind::explicit_set);
  std::sort(values.begin(), values.end());
  s.values_ = std::move(values);
  return s;
}

IntegerSet IntegerSet::evens() { return IntegerSet(Kind::evens); }
IntegerSet IntegerSet::odds() { return IntegerSet(Kind::odds); }
IntegerSet IntegerSet::all_primes() { return IntegerSet(Kind::primes); }

bool IntegerSet::contains(std::uint64_t n) const {
  switch (kind_) {
    case Kind::explicit_set:
      return std::binary_search(values_.begin(), values_.end(), n);
    case Kind::evens:
      return n % 2 == 0;
    case Kind::odds:
      return n % 2 == 1;
    case Kind::primes:
      return trial_division_prime(n);
  }
  return false;
}

std::vector<std::uint64_t> prime_plus(const IntegerSet& u,
                                      const PrimeWindow& w) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= w.bound(); ++n) {
    bool all_in = true;
    for (std::uint64_t p : w.divisors_of(n))
      if (!u.contains(p)) {
        all_in = false;
        break;
      }
    if (all_in) out.push_back(n);
  }
  return out;
}

std::vector<std::uint64_t> prime_minus(const IntegerSet& u,
                                       const PrimeWindow& w) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = 2; n <= w.bound(); ++n) {
    for (std::uint64_t p : w.divisors_of(n))
      if (u.contains(p)) {
        out.push_back(n);
        break;
      }
  }
  return out;
}

std::vector<std::uint64_t> prime_leaf(std::uint64_t p, const PrimeWindow& w) {
  if (!trial_division_prime(p)) throw bad_argument("leaf base must be prime");
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = p; q <= w.bound(); q *= p) {
    out.push_back(q);
    if (q > w.bound() / p) break;  // next power would overflow the window
  }
  return out;
}

SetDescription SetDescription::explicit_set(std::vector<std::uint64_t> v) {
  SetDescription d(Kind::explicit_set);
  d.values_ = std::move(v);
  return d;
}

SetDescription SetDescription::cofinite(std::vector<std::uint64_t> removed) {
  SetDescription d(Kind::cofinite);
  d.values_ = std::move(removed);
  return d;
}

SetDescription SetDescription::evens() { return SetDescription(Kind::evens); }
SetDescription SetDescription::odds() { return SetDescription(Kind::odds); }

SetDescription SetDescription::all_primes() {
  return SetDescription(Kind::all_primes);
}

SetDescription SetDescription::all_primes_minus(
    std::vector<std::uint64_t> removed) {
  SetDescription d(Kind::all_primes_minus);
  d.values_ = std::move(removed);
  return d;
}

SetDescription SetDescription::all_naturals() {
  return SetDescription(Kind::all_naturals);
}

SetDescription SetDescription::parse(const std::string& text) {
  if (text == "evens") return evens();
  if (text == "odds") return odds();
  if (text == "all-primes") return all_primes();
  if (text == "all-naturals") return all_naturals();
  const std::string complement_prefix = "complement:";
  const std::string minus_prefix = "all-primes-minus:";
  if (text.rfind(complement_prefix, 0) == 0)
    return cofinite(parse_number_list(text.substr(complement_prefix.size())));
  if (text.rfind(minus_prefix, 0) == 0)
    return all_primes_minus(
        parse_number_list(text.substr(minus_prefix.size())));
  if (!text.empty() && std::isdigit(static_cast<unsigned char>(text[0])))
    return explicit_set(parse_number_list(text));
  throw bad_argument("undecidable set description: " + text);
}

bool SetDescription::contains_every_prime() const {
  switch (kind_) {
    case Kind::all_naturals:
    case Kind::all_primes:
      return true;
    case Kind::explicit_set:
      return false;  // finitely many members, infinitely many primes
    case Kind::evens:
    case Kind::odds:
      return false;  // misses 3 or misses 2
    case Kind::cofinite:
    case Kind::all_primes_minus:
      for (std::uint64_t n : values_)
        if (trial_division_prime(n)) return false;
      return true;
  }
  return false;
}

bool wall_aleph0_contains(const SetDescription& u) {
  return u.contains_every_prime();
}

MultiFunction prime_multifunction(const PrimeWindow& w) {
  MultiFunction f(w.universe());
  for (std::uint64_t p : w.primes())
    for (std::uint64_t m = 2 * p; m <= w.bound(); m += p) {
      f.add(w.vertex_of(m), w.vertex_of(p));
      f.add(w.vertex_of(p), w.vertex_of(m));
    }
  return f;
}

}  // namespace mfn
