#include "rectdp/states.hpp"

#include <algorithm>
#include <map>

#include "rectdp/errors.hpp"

namespace rectdp {

namespace {

constexpr int kMaxEnumerationRows = 12;

void check_rows(std::size_t rows) {
  if (rows == 0 || rows > static_cast<std::size_t>(kMaxRows)) {
    throw StateError(StateError::Kind::BadShape,
                     "state must have between 1 and " +
                         std::to_string(kMaxRows) + " rows");
  }
}

// First-appearance relabeling of arbitrary positive labels.
std::array<std::uint8_t, kMaxRows> relabel(std::span<const int> comp) {
  std::array<std::uint8_t, kMaxRows> out{};
  std::map<int, std::uint8_t> mapping;
  for (std::size_t r = 0; r < comp.size(); ++r) {
    if (comp[r] == kNoComponent) continue;
    if (comp[r] < 0) {
      throw StateError(StateError::Kind::BadShape, "negative component label");
    }
    auto [it, inserted] = mapping.try_emplace(
        comp[r], static_cast<std::uint8_t>(mapping.size() + 1));
    out[r] = it->second;
  }
  return out;
}

bool crosses(int rows, const std::array<std::uint8_t, kMaxRows>& comp) {
  std::array<bool, kMaxRows + 1> seen{};
  std::array<bool, kMaxRows + 1> closed{};
  std::array<std::uint8_t, kMaxRows> stack{};
  int top = 0;
  for (int r = 0; r < rows; ++r) {
    const std::uint8_t c = comp[r];
    if (c == kNoComponent) continue;
    if (!seen[c]) {
      seen[c] = true;
      stack[top++] = c;
      continue;
    }
    if (closed[c]) return true;
    while (stack[top - 1] != c) closed[stack[--top]] = true;
  }
  return false;
}

void check_partition(int rows, const std::array<std::uint8_t, kMaxRows>& comp) {
  if (crosses(rows, comp)) {
    throw StateError(StateError::Kind::CrossingPartition,
                     "component partition is crossing");
  }
}

}  // namespace

char parity_symbol(Parity p) {
  switch (p) {
    case Parity::Zero:
      return '0';
    case Parity::Odd:
      return 'U';
    case Parity::Even:
      return 'E';
  }
  return '?';
}

TspState canonicalize_tsp(std::span<const Parity> parity,
                          std::span<const int> comp) {
  if (parity.size() != comp.size()) {
    throw StateError(StateError::Kind::BadShape,
                     "parity and component vectors differ in length");
  }
  check_rows(parity.size());
  const int rows = static_cast<int>(parity.size());
  TspState s;
  s.rows = rows;
  for (int r = 0; r < rows; ++r) {
    s.parity[r] = parity[r];
    if ((parity[r] == Parity::Zero) != (comp[r] == kNoComponent)) {
      throw StateError(StateError::Kind::ParityComponentMismatch,
                       "row " + std::to_string(r + 1) +
                           ": zero parity must coincide with no component");
    }
  }
  s.comp = relabel(comp);
  check_partition(rows, s.comp);

  std::array<int, kMaxRows + 1> size{};
  std::array<int, kMaxRows + 1> odd{};
  for (int r = 0; r < rows; ++r) {
    if (s.comp[r] == kNoComponent) continue;
    ++size[s.comp[r]];
    if (s.parity[r] == Parity::Odd) ++odd[s.comp[r]];
  }
  for (int r = 0; r < rows; ++r) {
    const std::uint8_t c = s.comp[r];
    if (c != kNoComponent && size[c] == 1 && s.parity[r] != Parity::Even) {
      throw StateError(StateError::Kind::SingletonNotEven,
                       "row " + std::to_string(r + 1) +
                           " is alone in its component but not even");
    }
  }
  for (int c = 1; c <= kMaxRows; ++c) {
    if (odd[c] % 2 != 0) {
      throw StateError(StateError::Kind::OddCountViolation,
                       "component " + std::to_string(c) +
                           " has an odd number of odd-degree rows");
    }
  }
  return s;
}

TspState canonicalize(const TspState& state) {
  std::vector<int> comp(state.comp.begin(), state.comp.begin() + state.rows);
  return canonicalize_tsp(
      std::span<const Parity>(state.parity.data(), state.rows), comp);
}

SteinerState canonicalize_steiner(std::span<const int> comp) {
  check_rows(comp.size());
  SteinerState s;
  s.rows = static_cast<int>(comp.size());
  s.comp = relabel(comp);
  check_partition(s.rows, s.comp);
  return s;
}

SteinerState canonicalize(const SteinerState& state) {
  std::vector<int> comp(state.comp.begin(), state.comp.begin() + state.rows);
  return canonicalize_steiner(comp);
}

std::string to_string(const TspState& state) {
  std::string out = "{(";
  for (int r = 0; r < state.rows; ++r) {
    if (r > 0) out += ',';
    out += parity_symbol(state.parity[r]);
  }
  out += "),(";
  for (int r = 0; r < state.rows; ++r) {
    if (r > 0) out += ',';
    out += state.comp[r] == kNoComponent ? std::string("-")
                                         : std::to_string(state.comp[r]);
  }
  out += ")}";
  return out;
}

std::string to_string(const SteinerState& state) {
  std::string out = "(";
  for (int r = 0; r < state.rows; ++r) {
    if (r > 0) out += ',';
    out += state.comp[r] == kNoComponent ? std::string("-")
                                         : std::to_string(state.comp[r]);
  }
  out += ")";
  return out;
}

namespace {

void check_enumeration_range(int h) {
  if (h < 1 || h > kMaxEnumerationRows) {
    throw GuardExceeded("state enumeration supports 1 <= h <= " +
                        std::to_string(kMaxEnumerationRows));
  }
}

// Generates every non-crossing partition of every subset of the rows, with
// canonical labels. `open` holds the blocks that may still receive rows;
// joining a block closes everything opened after it.
class PartitionGenerator {
 public:
  PartitionGenerator(int rows,
                     std::function<void(const std::array<std::uint8_t, kMaxRows>&)> emit)
      : rows_(rows), emit_(std::move(emit)) {}

  void run() { step(0, {}, 0, 1); }

 private:
  using Stack = std::array<std::uint8_t, kMaxRows>;

  // `open` holds the blocks that may still receive rows, innermost last. It is
  // passed by value: deeper calls rewrite slots the caller still needs.
  void step(int r, Stack open, int open_size, std::uint8_t next) {
    if (r == rows_) {
      emit_(comp_);
      return;
    }
    comp_[r] = kNoComponent;
    step(r + 1, open, open_size, next);

    comp_[r] = next;
    Stack pushed = open;
    pushed[open_size] = next;
    step(r + 1, pushed, open_size + 1, static_cast<std::uint8_t>(next + 1));

    // Joining block d closes every block opened after it.
    for (int d = open_size - 1; d >= 0; --d) {
      comp_[r] = open[d];
      step(r + 1, open, d + 1, next);
    }
    comp_[r] = kNoComponent;
  }

  int rows_;
  std::function<void(const std::array<std::uint8_t, kMaxRows>&)> emit_;
  std::array<std::uint8_t, kMaxRows> comp_{};
};

}  // namespace

void for_each_steiner_state(int h,
                            const std::function<void(const SteinerState&)>& fn) {
  check_enumeration_range(h);
  SteinerState s = SteinerState::empty(h);
  PartitionGenerator gen(h, [&](const std::array<std::uint8_t, kMaxRows>& comp) {
    s.comp = comp;
    fn(s);
  });
  gen.run();
}

void for_each_tsp_state(int h, const std::function<void(const TspState&)>& fn) {
  check_enumeration_range(h);
  TspState s = TspState::empty(h);
  std::array<int, kMaxRows + 1> size{};
  std::array<int, kMaxRows + 1> remaining{};
  std::array<int, kMaxRows + 1> odd{};

  // Parity decoration: singletons are Even, the last row of a larger block
  // takes whatever keeps the block's Odd count even, other rows are free.
  std::function<void(int)> decorate = [&](int r) {
    if (r == h) {
      fn(s);
      return;
    }
    const std::uint8_t c = s.comp[r];
    if (c == kNoComponent) {
      s.parity[r] = Parity::Zero;
      decorate(r + 1);
      return;
    }
    --remaining[c];
    if (size[c] == 1) {
      s.parity[r] = Parity::Even;
      decorate(r + 1);
    } else if (remaining[c] == 0) {
      s.parity[r] = odd[c] % 2 == 0 ? Parity::Even : Parity::Odd;
      decorate(r + 1);
    } else {
      s.parity[r] = Parity::Even;
      decorate(r + 1);
      s.parity[r] = Parity::Odd;
      ++odd[c];
      decorate(r + 1);
      --odd[c];
    }
    ++remaining[c];
  };

  PartitionGenerator gen(h, [&](const std::array<std::uint8_t, kMaxRows>& comp) {
    s.comp = comp;
    size.fill(0);
    odd.fill(0);
    for (int r = 0; r < h; ++r) ++size[comp[r]];
    remaining = size;
    decorate(0);
  });
  gen.run();
}

std::vector<StateKey> enumerate_states(int h, Problem problem) {
  std::vector<StateKey> keys;
  if (problem == Problem::Tsp) {
    for_each_tsp_state(h, [&](const TspState& s) { keys.push_back(encode(s)); });
  } else {
    for_each_steiner_state(h,
                           [&](const SteinerState& s) { keys.push_back(encode(s)); });
  }
  std::sort(keys.begin(), keys.end());
  return keys;
}

BigInt super_catalan(int k) {
  if (k < 0) return 0;
  // (n + 1) S_n = 3 (2n - 1) S_{n-1} - (n - 2) S_{n-2}
  BigInt prev = 1;  // S_0
  BigInt cur = 1;   // S_1
  if (k <= 1) return 1;
  for (int n = 2; n <= k; ++n) {
    BigInt next = (3 * (2 * n - 1) * cur - (n - 2) * prev) / (n + 1);
    prev = cur;
    cur = next;
  }
  return cur;
}

BigInt catalan(int k) {
  if (k < 0) return 0;
  BigInt c = 1;
  for (int n = 1; n <= k; ++n) c = c * 2 * (2 * n - 1) / (n + 1);
  return c;
}

BigInt count_positive_states(int h, Problem problem) {
  return problem == Problem::Tsp ? super_catalan(h) : catalan(h);
}

BigInt count_states(int h, Problem problem) {
  if (h < 0) return 0;
  BigInt total = 0;
  BigInt binom = 1;  // C(h, k)
  for (int k = 0; k <= h; ++k) {
    total += binom * count_positive_states(k, problem);
    binom = binom * (h - k) / (k + 1);
  }
  return total;
}

}  // namespace rectdp
