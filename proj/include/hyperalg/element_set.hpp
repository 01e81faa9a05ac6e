#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace hyperalg {

/// Index of a hypergroup element. Element 0 is always the identity.
using Element = unsigned;

/// Subset of {0, ..., n-1} for an ambient order n <= 64, stored as one word.
///
/// The ambient order is implied by context; every operation that needs it
/// (complement, full set) takes it as an argument.
class ElementSet {
  public:
    static constexpr std::size_t max_order = 64;

    constexpr ElementSet() = default;
    constexpr explicit ElementSet(std::uint64_t bits) : bits_{bits} {}

    static constexpr ElementSet singleton(Element e) { return ElementSet{std::uint64_t{1} << e}; }
    static constexpr ElementSet full(std::size_t order) {
        return ElementSet{order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1};
    }
    static ElementSet of(std::initializer_list<Element> members) {
        ElementSet s;
        for (auto e : members) s.insert(e);
        return s;
    }

    [[nodiscard]] constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
    constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
    constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }

    [[nodiscard]] constexpr bool empty() const { return bits_ == 0; }
    [[nodiscard]] constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    [[nodiscard]] constexpr bool is_singleton() const { return bits_ != 0 && (bits_ & (bits_ - 1)) == 0; }
    [[nodiscard]] constexpr std::uint64_t bits() const { return bits_; }

    /// Smallest member; undefined on the empty set.
    [[nodiscard]] constexpr Element min() const { return static_cast<Element>(std::countr_zero(bits_)); }

    [[nodiscard]] constexpr bool subset_of(ElementSet o) const { return (bits_ & ~o.bits_) == 0; }
    [[nodiscard]] constexpr bool intersects(ElementSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr ElementSet operator|(ElementSet o) const { return ElementSet{bits_ | o.bits_}; }
    constexpr ElementSet operator&(ElementSet o) const { return ElementSet{bits_ & o.bits_}; }
    constexpr ElementSet operator-(ElementSet o) const { return ElementSet{bits_ & ~o.bits_}; }
    constexpr ElementSet& operator|=(ElementSet o) {
        bits_ |= o.bits_;
        return *this;
    }
    constexpr ElementSet& operator&=(ElementSet o) {
        bits_ &= o.bits_;
        return *this;
    }

    constexpr bool operator==(const ElementSet&) const = default;

    class iterator {
      public:
        using value_type = Element;
        using difference_type = std::ptrdiff_t;

        constexpr iterator() = default;
        constexpr explicit iterator(std::uint64_t rest) : rest_{rest} {}
        constexpr Element operator*() const { return static_cast<Element>(std::countr_zero(rest_)); }
        constexpr iterator& operator++() {
            rest_ &= rest_ - 1;
            return *this;
        }
        constexpr iterator operator++(int) {
            auto old = *this;
            ++*this;
            return old;
        }
        constexpr bool operator==(const iterator&) const = default;

      private:
        std::uint64_t rest_ = 0;
    };

    [[nodiscard]] constexpr iterator begin() const { return iterator{bits_}; }
    [[nodiscard]] constexpr iterator end() const { return iterator{0}; }

    [[nodiscard]] std::vector<Element> members() const { return {begin(), end()}; }

    /// Ascending members joined by `sep`, e.g. "0,2,3".
    [[nodiscard]] std::string to_string(const char* sep = ",") const {
        std::string out;
        for (auto e : *this) {
            if (!out.empty()) out += sep;
            out += std::to_string(e);
        }
        return out;
    }

  private:
    std::uint64_t bits_ = 0;
};

/// Lexicographic order on ascending member lists (meaningful for equal-size sets).
constexpr bool lex_less(ElementSet a, ElementSet b) {
    const auto diff = a.bits() ^ b.bits();
    if (diff == 0) return false;
    return a.contains(static_cast<Element>(std::countr_zero(diff)));
}

/// Deterministic ordering used for lattice members: by size, then lexicographically.
constexpr bool size_lex_less(ElementSet a, ElementSet b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return lex_less(a, b);
}

} // namespace hyperalg
