#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace multalg {

  // Largest carrier representable by Subset.
  inline constexpr std::size_t kMaxCarrier = 32;

  /// A set of carrier elements stored as a bitmask over 0..kMaxCarrier-1.
  ///
  /// Elements of the power-set algebra are the nonempty Subsets; the empty
  /// value is only used as an accumulator and is rejected wherever an
  /// element of P*(A) is required.
  class Subset {
   public:
    constexpr Subset() = default;
    constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}

    static constexpr Subset singleton(std::size_t x) {
      return Subset(std::uint32_t{1} << x);
    }

    static constexpr Subset full(std::size_t n) {
      return Subset(n >= 32 ? ~std::uint32_t{0}
                            : (std::uint32_t{1} << n) - 1);
    }

    static Subset of(std::initializer_list<std::size_t> xs) {
      Subset s;
      for (auto x : xs) {
        s.insert(x);
      }
      return s;
    }

    constexpr std::uint32_t bits() const noexcept {
      return bits_;
    }
    constexpr bool empty() const noexcept {
      return bits_ == 0;
    }
    constexpr std::size_t size() const noexcept {
      return static_cast<std::size_t>(std::popcount(bits_));
    }
    constexpr bool contains(std::size_t x) const noexcept {
      return x < kMaxCarrier && ((bits_ >> x) & 1U) != 0;
    }
    constexpr void insert(std::size_t x) noexcept {
      bits_ |= std::uint32_t{1} << x;
    }
    // Smallest member; undefined on the empty set.
    constexpr std::size_t min() const noexcept {
      return static_cast<std::size_t>(std::countr_zero(bits_));
    }
    constexpr bool subset_of(Subset other) const noexcept {
      return (bits_ & ~other.bits_) == 0;
    }
    constexpr bool intersects(Subset other) const noexcept {
      return (bits_ & other.bits_) != 0;
    }
    constexpr bool within(std::size_t n) const noexcept {
      return subset_of(full(n));
    }

    constexpr Subset& operator|=(Subset other) noexcept {
      bits_ |= other.bits_;
      return *this;
    }
    friend constexpr Subset operator|(Subset a, Subset b) noexcept {
      return Subset(a.bits_ | b.bits_);
    }
    friend constexpr Subset operator&(Subset a, Subset b) noexcept {
      return Subset(a.bits_ & b.bits_);
    }
    friend constexpr bool operator==(Subset, Subset) = default;
    friend constexpr auto operator<=>(Subset, Subset) = default;

    template <typename Func>
    constexpr void for_each(Func&& f) const {
      for (std::uint32_t rest = bits_; rest != 0; rest &= rest - 1) {
        f(static_cast<std::size_t>(std::countr_zero(rest)));
      }
    }

    std::vector<std::size_t> members() const {
      std::vector<std::size_t> out;
      out.reserve(size());
      for_each([&out](std::size_t x) { out.push_back(x); });
      return out;
    }

    // "{0,2}"
    std::string to_string() const;

   private:
    std::uint32_t bits_ = 0;
  };

}  // namespace multalg
