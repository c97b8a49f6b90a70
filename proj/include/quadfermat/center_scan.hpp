#pragma once

#include <cstdint>
#include <optional>

#include "quadfermat/arith.hpp"

namespace quadfermat {

/// Walks centers c_k = first + k*step and answers "is c_k^2 - N a perfect
/// square?" for each. The discriminant is carried as a residue modulo the
/// pre-screen modulus and updated in O(1) machine arithmetic per step; the
/// exact big-integer test runs only when the residue could be a square.
class CenterScan {
public:
  CenterScan(Natural first_center, Natural step, Natural target)
      : first_(std::move(first_center)), step_(std::move(step)), target_(std::move(target)) {
    constexpr std::uint64_t m = detail::screen_modulus;
    center_res_ = detail::mod_u64(first_, m);
    disc_res_ = detail::mod_u64(first_ * first_ - target_, m);
    step_res_ = detail::mod_u64(step_, m);
    step_sq_res_ = detail::mul_mod(step_res_, step_res_, m);
  }

  /// Moves to the next center: (c + s)^2 - N = (c^2 - N) + 2cs + s^2.
  void advance() {
    constexpr std::uint64_t m = detail::screen_modulus;
    disc_res_ = (disc_res_ + 2 * center_res_ * step_res_ + step_sq_res_) % m;
    center_res_ = (center_res_ + step_res_) % m;
    ++index_;
  }

  std::uint64_t index() const { return index_; }
  Natural center() const { return first_ + step_ * index_; }
  Integer disc() const {
    Natural c = center();
    return c * c - target_;
  }

  bool may_be_square() const { return detail::may_be_square(disc_res_); }

  /// sqrt(c^2 - N) when it is an integer.
  std::optional<Natural> root() const {
    if (!may_be_square()) return std::nullopt;
    return is_perfect_square(disc(), false);
  }

private:
  Natural first_;
  Natural step_;
  Natural target_;
  std::uint64_t index_ = 0;
  std::uint64_t center_res_ = 0;
  std::uint64_t disc_res_ = 0;
  std::uint64_t step_res_ = 0;
  std::uint64_t step_sq_res_ = 0;
};

}  // namespace quadfermat
