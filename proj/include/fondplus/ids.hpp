#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace fondplus {

/// Dense integer index tagged with the kind of object it refers to.
template <class Tag>
struct Id {
  std::uint32_t value = 0;

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}

  [[nodiscard]] constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(Id, Id) = default;
  friend std::ostream& operator<<(std::ostream& os, Id id) { return os << id.value; }
};

using StateId = Id<struct StateTag>;
using ActionId = Id<struct ActionTag>;

}  // namespace fondplus

template <class Tag>
struct std::hash<fondplus::Id<Tag>> {
  std::size_t operator()(fondplus::Id<Tag> id) const noexcept {
    return std::hash<std::uint32_t>{}(id.value);
  }
};
