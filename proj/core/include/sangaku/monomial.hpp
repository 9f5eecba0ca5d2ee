#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace sangaku {

// Global variable order k < x < w < v < y < t. Every polynomial in the
// library draws its variables from this set.
enum class Var : std::uint8_t { k = 0, x, w, v, y, t };

inline constexpr int kVarCount = 6;
inline constexpr int kMaxPolyVars = 4;

inline constexpr std::array<Var, kVarCount> kAllVars = {Var::k, Var::x, Var::w,
                                                        Var::v, Var::y, Var::t};

constexpr int index_of(Var v) { return static_cast<int>(v); }

constexpr char var_name(Var v) {
  constexpr std::array<char, kVarCount> names = {'k', 'x', 'w', 'v', 'y', 't'};
  return names[index_of(v)];
}

std::optional<Var> parse_var(std::string_view name);

class VarSet {
 public:
  constexpr VarSet() = default;
  constexpr VarSet(std::initializer_list<Var> vars) {
    for (Var v : vars) bits_ |= bit(v);
  }

  [[nodiscard]] constexpr bool contains(Var v) const { return (bits_ & bit(v)) != 0; }
  [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
  [[nodiscard]] constexpr int size() const { return __builtin_popcount(bits_); }

  constexpr VarSet& insert(Var v) {
    bits_ |= bit(v);
    return *this;
  }
  [[nodiscard]] constexpr VarSet without(Var v) const {
    VarSet r = *this;
    r.bits_ &= static_cast<std::uint8_t>(~bit(v));
    return r;
  }
  [[nodiscard]] constexpr VarSet united(VarSet other) const {
    VarSet r = *this;
    r.bits_ |= other.bits_;
    return r;
  }
  [[nodiscard]] constexpr bool subset_of(VarSet other) const {
    return (bits_ & ~other.bits_) == 0;
  }

  // Ascending in the global order.
  [[nodiscard]] std::vector<Var> list() const {
    std::vector<Var> out;
    for (Var v : kAllVars) {
      if (contains(v)) out.push_back(v);
    }
    return out;
  }

  // Highest variable in the global order; set must be nonempty.
  [[nodiscard]] Var highest() const {
    for (int i = kVarCount - 1; i >= 0; --i) {
      if (bits_ & (1u << i)) return static_cast<Var>(i);
    }
    return Var::k;
  }

  constexpr bool operator==(const VarSet&) const = default;

 private:
  static constexpr std::uint8_t bit(Var v) {
    return static_cast<std::uint8_t>(1u << index_of(v));
  }
  std::uint8_t bits_ = 0;
};

// Exponent vector packed into 128 bits, 21 bits per variable, with the
// highest variable (t) in the most significant field. Integer comparison of
// the packed words is therefore lexicographic comparison with t dominant,
// and multiplication of monomials is integer addition.
class Monomial {
 public:
  static constexpr int kFieldBits = 21;
  static constexpr std::uint32_t kMaxExponent = (1u << kFieldBits) - 1;

  constexpr Monomial() = default;

  static Monomial of(Var v, std::uint32_t e) {
    Monomial m;
    m.packed_ = static_cast<unsigned __int128>(e) << shift(v);
    return m;
  }

  [[nodiscard]] std::uint32_t exponent(Var v) const {
    return static_cast<std::uint32_t>((packed_ >> shift(v)) & kMaxExponent);
  }

  [[nodiscard]] Monomial with_exponent(Var v, std::uint32_t e) const {
    Monomial m = *this;
    m.packed_ &= ~(static_cast<unsigned __int128>(kMaxExponent) << shift(v));
    m.packed_ |= static_cast<unsigned __int128>(e) << shift(v);
    return m;
  }

  [[nodiscard]] Monomial without(Var v) const { return with_exponent(v, 0); }

  [[nodiscard]] bool is_one() const { return packed_ == 0; }

  [[nodiscard]] std::uint32_t total_degree() const {
    std::uint32_t d = 0;
    for (Var v : kAllVars) d += exponent(v);
    return d;
  }

  [[nodiscard]] bool divides(const Monomial& other) const {
    for (Var v : kAllVars) {
      if (exponent(v) > other.exponent(v)) return false;
    }
    return true;
  }

  // Caller guarantees divides(other) for division.
  friend Monomial operator*(Monomial a, Monomial b) {
    a.packed_ += b.packed_;
    return a;
  }
  friend Monomial operator/(Monomial a, Monomial b) {
    a.packed_ -= b.packed_;
    return a;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.packed_ == b.packed_;
  }
  friend bool operator<(const Monomial& a, const Monomial& b) {
    return a.packed_ < b.packed_;
  }

  [[nodiscard]] std::uint64_t hash() const {
    return static_cast<std::uint64_t>(packed_) ^
           (static_cast<std::uint64_t>(packed_ >> 64) * 0x9e3779b97f4a7c15ULL);
  }

 private:
  static constexpr int shift(Var v) { return index_of(v) * kFieldBits; }
  unsigned __int128 packed_ = 0;
};

}  // namespace sangaku
