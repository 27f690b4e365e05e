#pragma once

#include <array>
#include <atomic>
#include <compare>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace bzeta {

inline constexpr std::size_t kMaxVars = 16;

namespace detail {

// Append-only name table. Slots never change once published.
struct VarTable {
  std::array<std::string, kMaxVars> names;
  std::atomic<std::size_t> count{0};
  std::mutex mu;

  VarTable() {
    constexpr std::array<std::string_view, 13> seed = {
        "Q", "T", "A", "B", "G", "U", "L", "X", "Y", "kappa", "A0", "A1", "W"};
    for (std::size_t i = 0; i < seed.size(); ++i) names[i] = seed[i];
    count.store(seed.size(), std::memory_order_release);
  }
};

inline VarTable& var_table() {
  static VarTable t;
  return t;
}

}  // namespace detail

/// A symbol in the rational-function field. Cheap value type (one byte).
class Var {
 public:
  /// Interns `name` (thread-safe); throws when the table is full.
  explicit Var(std::string_view name) {
    auto& t = detail::var_table();
    std::lock_guard lock(t.mu);
    const std::size_t n = t.count.load(std::memory_order_acquire);
    for (std::size_t i = 0; i < n; ++i) {
      if (t.names[i] == name) {
        idx_ = static_cast<std::uint8_t>(i);
        return;
      }
    }
    if (n == kMaxVars) throw std::length_error("bzeta::Var: variable table full");
    if (name.empty()) throw std::invalid_argument("bzeta::Var: empty name");
    t.names[n] = std::string(name);
    t.count.store(n + 1, std::memory_order_release);
    idx_ = static_cast<std::uint8_t>(n);
  }

  static constexpr Var at(std::uint8_t i) noexcept { return Var(i, 0); }

  /// Looks up without interning.
  static bool exists(std::string_view name) {
    auto& t = detail::var_table();
    const std::size_t n = t.count.load(std::memory_order_acquire);
    for (std::size_t i = 0; i < n; ++i)
      if (t.names[i] == name) return true;
    return false;
  }

  constexpr std::uint8_t index() const noexcept { return idx_; }
  const std::string& name() const { return detail::var_table().names[idx_]; }

  friend constexpr auto operator<=>(Var, Var) = default;

 private:
  constexpr Var(std::uint8_t i, int) : idx_(i) {}
  std::uint8_t idx_ = 0;
};

/// Registry symbols. Q = q^{1/2}, T = q^{-s}, A/B/G = alpha/beta/gamma,
/// U = mu(varpi), L = Lambda(varpi).
namespace sym {
inline constexpr Var Q = Var::at(0);
inline constexpr Var T = Var::at(1);
inline constexpr Var A = Var::at(2);
inline constexpr Var B = Var::at(3);
inline constexpr Var G = Var::at(4);
inline constexpr Var U = Var::at(5);
inline constexpr Var L = Var::at(6);
inline constexpr Var X = Var::at(7);
inline constexpr Var Y = Var::at(8);
inline constexpr Var kappa = Var::at(9);
inline constexpr Var A0 = Var::at(10);
inline constexpr Var A1 = Var::at(11);
inline constexpr Var W = Var::at(12);
}  // namespace sym

}  // namespace bzeta
