#pragma once

#include <compare>
#include <cstddef>
#include <functional>

namespace stable_core {

/// Zero-based participant index. The tag keeps worker and firm ids from
/// being mixed up at compile time.
template <class Tag>
struct Id {
  int index = 0;

  constexpr Id() = default;
  constexpr explicit Id(int i) : index(i) {}

  constexpr auto operator<=>(const Id&) const = default;
};

struct WorkerTag;
struct FirmTag;

using WorkerId = Id<WorkerTag>;
using FirmId = Id<FirmTag>;

/// Which side of the market a participant (or a proposer) belongs to.
enum class Side { Worker, Firm };

}  // namespace stable_core

template <class Tag>
struct std::hash<stable_core::Id<Tag>> {
  std::size_t operator()(const stable_core::Id<Tag>& id) const noexcept {
    return std::hash<int>{}(id.index);
  }
};
