#ifndef BALGAMMA_TYPES_HPP
#define BALGAMMA_TYPES_HPP

#include <array>
#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace balgamma {

inline constexpr std::size_t kMaxArcs = 128;
inline constexpr std::size_t kMaxVertices = 64;

using Count = std::uint64_t;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ParseError : Error {
  ParseError(std::size_t line, const std::string& what)
      : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  /// 0 when the error is not tied to a line of the input.
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Thrown when an exhaustive search would exceed (or did exceed) its node budget.
struct BudgetExceeded : Error {
  using Error::Error;
};

struct PreconditionError : Error {
  using Error::Error;
};

/// A postcondition the mathematics guarantees did not hold. Always a bug.
struct InvariantViolation : Error {
  using Error::Error;
};

struct OverflowError : Error {
  using Error::Error;
};

inline Count checked_add(Count a, Count b) {
  Count r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("count overflow in addition");
  return r;
}

inline Count checked_mul(Count a, Count b) {
  Count r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("count overflow in multiplication");
  return r;
}

/// Exact binomial coefficient with overflow detection.
inline Count binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::size_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > static_cast<unsigned __int128>(UINT64_MAX)) throw OverflowError("binomial overflow");
  }
  return static_cast<Count>(r);
}

// ---------------------------------------------------------------------------
// VertexSet: bitset over vertex indices (|V| <= 64)
// ---------------------------------------------------------------------------

class VertexSet {
 public:
  constexpr VertexSet() = default;
  constexpr explicit VertexSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr VertexSet single(std::size_t v) { return VertexSet(std::uint64_t{1} << v); }
  static constexpr VertexSet all(std::size_t n) {
    return VertexSet(n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
  }

  constexpr bool test(std::size_t v) const { return (bits_ >> v) & 1u; }
  constexpr void set(std::size_t v) { bits_ |= std::uint64_t{1} << v; }
  constexpr void reset(std::size_t v) { bits_ &= ~(std::uint64_t{1} << v); }
  constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::uint64_t bits() const { return bits_; }

  /// Complement relative to the first n vertices.
  constexpr VertexSet complement(std::size_t n) const { return VertexSet(~bits_ & all(n).bits_); }
  constexpr bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }

  friend constexpr VertexSet operator|(VertexSet a, VertexSet b) { return VertexSet(a.bits_ | b.bits_); }
  friend constexpr VertexSet operator&(VertexSet a, VertexSet b) { return VertexSet(a.bits_ & b.bits_); }
  constexpr VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
  constexpr VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
  friend constexpr bool operator==(VertexSet, VertexSet) = default;
  friend constexpr auto operator<=>(VertexSet a, VertexSet b) { return a.bits_ <=> b.bits_; }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::uint64_t w = bits_; w; w &= w - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(w)));
    return out;
  }

 private:
  std::uint64_t bits_ = 0;
};

// ---------------------------------------------------------------------------
// ArcSubset: bitset over arc indices (|A| <= 128)
// ---------------------------------------------------------------------------

class ArcSubset {
 public:
  constexpr ArcSubset() = default;
  constexpr ArcSubset(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}

  static constexpr ArcSubset single(std::size_t a) {
    ArcSubset s;
    s.set(a);
    return s;
  }
  /// The first m arcs.
  static constexpr ArcSubset all(std::size_t m) {
    ArcSubset s;
    s.w_[0] = m >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    s.w_[1] = m >= 128 ? ~std::uint64_t{0} : m > 64 ? (std::uint64_t{1} << (m - 64)) - 1 : 0;
    return s;
  }
  static ArcSubset of(std::initializer_list<std::size_t> arcs) {
    ArcSubset s;
    for (auto a : arcs) s.set(a);
    return s;
  }

  constexpr bool test(std::size_t a) const { return (w_[a >> 6] >> (a & 63)) & 1u; }
  constexpr void set(std::size_t a) { w_[a >> 6] |= std::uint64_t{1} << (a & 63); }
  constexpr void reset(std::size_t a) { w_[a >> 6] &= ~(std::uint64_t{1} << (a & 63)); }
  constexpr std::size_t count() const {
    return static_cast<std::size_t>(std::popcount(w_[0]) + std::popcount(w_[1]));
  }
  constexpr bool empty() const { return (w_[0] | w_[1]) == 0; }
  constexpr bool subset_of(const ArcSubset& o) const {
    return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
  }
  constexpr std::uint64_t word(std::size_t i) const { return w_[i]; }

  /// Lowest set index, or 128 when empty.
  constexpr std::size_t lowest() const {
    if (w_[0]) return static_cast<std::size_t>(std::countr_zero(w_[0]));
    if (w_[1]) return 64 + static_cast<std::size_t>(std::countr_zero(w_[1]));
    return kMaxArcs;
  }
  /// Highest set index, or 128 when empty.
  constexpr std::size_t highest() const {
    if (w_[1]) return 127 - static_cast<std::size_t>(std::countl_zero(w_[1]));
    if (w_[0]) return 63 - static_cast<std::size_t>(std::countl_zero(w_[0]));
    return kMaxArcs;
  }

  friend constexpr ArcSubset operator|(ArcSubset a, const ArcSubset& b) { return a |= b; }
  friend constexpr ArcSubset operator&(ArcSubset a, const ArcSubset& b) { return a &= b; }
  /// Set difference a \ b.
  friend constexpr ArcSubset operator-(ArcSubset a, const ArcSubset& b) {
    a.w_[0] &= ~b.w_[0];
    a.w_[1] &= ~b.w_[1];
    return a;
  }
  constexpr ArcSubset& operator|=(const ArcSubset& o) {
    w_[0] |= o.w_[0];
    w_[1] |= o.w_[1];
    return *this;
  }
  constexpr ArcSubset& operator&=(const ArcSubset& o) {
    w_[0] &= o.w_[0];
    w_[1] &= o.w_[1];
    return *this;
  }
  friend constexpr bool operator==(const ArcSubset&, const ArcSubset&) = default;

  // Lexicographic order of the ascending arc-index sequences.
  friend constexpr std::strong_ordering operator<=>(const ArcSubset& a, const ArcSubset& b) {
    if (a == b) return std::strong_ordering::equal;
    ArcSubset diff(a.w_[0] ^ b.w_[0], a.w_[1] ^ b.w_[1]);
    const std::size_t i = diff.lowest();
    const bool in_a = a.test(i);
    const ArcSubset& other = in_a ? b : a;
    const std::size_t hi = other.highest();
    const bool other_continues = hi != kMaxArcs && hi > i;
    // The set holding i is smaller iff the other one still has an element after i.
    if (in_a) return other_continues ? std::strong_ordering::less : std::strong_ordering::greater;
    return other_continues ? std::strong_ordering::greater : std::strong_ordering::less;
  }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::size_t k = 0; k < 2; ++k)
      for (std::uint64_t w = w_[k]; w; w &= w - 1) f(k * 64 + static_cast<std::size_t>(std::countr_zero(w)));
  }

  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    out.reserve(count());
    for_each([&](std::size_t a) { out.push_back(a); });
    return out;
  }

 private:
  std::array<std::uint64_t, 2> w_{0, 0};
};

struct ArcSubsetHash {
  std::size_t operator()(const ArcSubset& s) const noexcept {
    return std::hash<std::uint64_t>{}(s.word(0) * 0x9E3779B97F4A7C15ull ^ s.word(1));
  }
};

}  // namespace balgamma

#endif  // BALGAMMA_TYPES_HPP
