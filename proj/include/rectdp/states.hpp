#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "rectdp/geometry.hpp"

namespace rectdp {

using BigInt = boost::multiprecision::cpp_int;

// Packed frontier state; see encode() for the layout.
using StateKey = std::uint64_t;

inline constexpr int kMaxRows = 16;
inline constexpr int kNoComponent = 0;

// Degree parity of a frontier vertex: 0 / U / E.
enum class Parity : std::uint8_t { Zero = 0, Odd = 1, Even = 2 };

constexpr Parity advance(Parity p, int mult) {
  if (mult == 0) return p;
  if (mult == 2) return p == Parity::Odd ? Parity::Odd : Parity::Even;
  return p == Parity::Odd ? Parity::Even : Parity::Odd;
}

char parity_symbol(Parity p);

// Frontier state of the tour DP: for each row (0 = bottom) the parity of the
// frontier vertex and the component it belongs to (kNoComponent iff Zero).
// Entries past `rows` stay zero so that defaulted equality works.
struct TspState {
  int rows = 0;
  std::array<Parity, kMaxRows> parity{};
  std::array<std::uint8_t, kMaxRows> comp{};

  static TspState empty(int rows) {
    TspState s;
    s.rows = rows;
    return s;
  }
  friend bool operator==(const TspState&, const TspState&) = default;
};

// Frontier state of the tree DP: component per row or kNoComponent.
struct SteinerState {
  int rows = 0;
  std::array<std::uint8_t, kMaxRows> comp{};

  static SteinerState empty(int rows) {
    SteinerState s;
    s.rows = rows;
    return s;
  }
  friend bool operator==(const SteinerState&, const SteinerState&) = default;
};

// Validating canonicalizers: relabel components by first appearance from the
// bottom row and throw StateError on any invariant violation. Component
// labels in `comp` are arbitrary positive integers, kNoComponent for none.
TspState canonicalize_tsp(std::span<const Parity> parity,
                          std::span<const int> comp);
TspState canonicalize(const TspState& state);
SteinerState canonicalize_steiner(std::span<const int> comp);
SteinerState canonicalize(const SteinerState& state);

std::string to_string(const TspState& state);      // {(E,E,0),(1,2,-)}
std::string to_string(const SteinerState& state);  // (1,1,-,1)

namespace detail {

// Role of a row inside its (non-crossing) block. Together with the row order
// the roles determine the partition: walking bottom-up, Open pushes a block,
// Mid joins the top block and Close joins and pops it.
enum Role : unsigned { kSingle = 0, kOpen = 1, kMid = 2, kClose = 3 };

// 4 bits per row: (tag << 2) | role, nibble 0 for an empty row. `tag` is the
// parity for TSP states and 1 for occupied Steiner rows. Labels may be any
// values in [1, 31]; only the partition they induce matters.
inline StateKey pack(int rows, const std::uint8_t* tag,
                     const std::uint8_t* comp) {
  std::uint32_t seen = 0;
  std::array<bool, kMaxRows> first{};
  for (int r = 0; r < rows; ++r) {
    const std::uint32_t bit = std::uint32_t{1} << comp[r];
    if (comp[r] != kNoComponent) {
      first[r] = (seen & bit) == 0;
      seen |= bit;
    }
  }
  seen = 0;
  StateKey key = 0;
  for (int r = rows - 1; r >= 0; --r) {
    if (comp[r] == kNoComponent) continue;
    const std::uint32_t bit = std::uint32_t{1} << comp[r];
    const bool last = (seen & bit) == 0;
    seen |= bit;
    const unsigned role = first[r] ? (last ? kSingle : kOpen)
                                   : (last ? kClose : kMid);
    key |= static_cast<StateKey>((unsigned{tag[r]} << 2) | role) << (4 * r);
  }
  return key;
}

// Inverse of pack(), producing canonical labels 1, 2, ... in first-appearance
// order.
inline void unpack(StateKey key, int rows, std::uint8_t* tag,
                   std::uint8_t* comp) {
  std::array<std::uint8_t, kMaxRows> stack{};
  int top = 0;
  std::uint8_t next = 1;
  for (int r = 0; r < rows; ++r) {
    const unsigned nib = static_cast<unsigned>(key >> (4 * r)) & 0xFu;
    if (nib == 0) {
      tag[r] = 0;
      comp[r] = kNoComponent;
      continue;
    }
    tag[r] = static_cast<std::uint8_t>(nib >> 2);
    switch (nib & 3u) {
      case kSingle:
        comp[r] = next++;
        break;
      case kOpen:
        comp[r] = next;
        stack[top++] = next++;
        break;
      case kMid:
        comp[r] = stack[top - 1];
        break;
      default:
        comp[r] = stack[--top];
        break;
    }
  }
}

}  // namespace detail

// Encoding requires a non-crossing partition with Zero rows unlabeled; it is
// invariant under relabeling, so decode(encode(s)) == canonicalize(s).
inline StateKey encode(const TspState& s) {
  return detail::pack(s.rows, reinterpret_cast<const std::uint8_t*>(s.parity.data()),
                      s.comp.data());
}

inline TspState decode_tsp(StateKey key, int rows) {
  TspState s;
  s.rows = rows;
  detail::unpack(key, rows, reinterpret_cast<std::uint8_t*>(s.parity.data()),
                 s.comp.data());
  return s;
}

inline StateKey encode(const SteinerState& s) {
  std::array<std::uint8_t, kMaxRows> tag{};
  for (int r = 0; r < s.rows; ++r) tag[r] = s.comp[r] != kNoComponent ? 1 : 0;
  return detail::pack(s.rows, tag.data(), s.comp.data());
}

inline SteinerState decode_steiner(StateKey key, int rows) {
  SteinerState s;
  s.rows = rows;
  std::array<std::uint8_t, kMaxRows> tag{};
  detail::unpack(key, rows, tag.data(), s.comp.data());
  return s;
}

// Exhaustive enumeration of all valid canonical states on h rows, 1 <= h <= 12
// (GuardExceeded otherwise). Callbacks see each state exactly once.
void for_each_tsp_state(int h, const std::function<void(const TspState&)>& fn);
void for_each_steiner_state(int h,
                            const std::function<void(const SteinerState&)>& fn);
// Keys of all valid states, sorted ascending.
std::vector<StateKey> enumerate_states(int h, Problem problem);

// Closed forms: binomial transforms of the super Catalan (TSP) and Catalan
// (Steiner) numbers.
BigInt count_states(int h, Problem problem);
// States without empty rows: S_h for TSP, C_h for Steiner.
BigInt count_positive_states(int h, Problem problem);
BigInt super_catalan(int k);
BigInt catalan(int k);

}  // namespace rectdp
