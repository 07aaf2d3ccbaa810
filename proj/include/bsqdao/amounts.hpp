#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "bsqdao/errors.hpp"

namespace bsq {

/// BSQ amount in centi-BSQ (1 BSQ = 100 centi-BSQ). All arithmetic is exact
/// integer arithmetic; amounts are never negative.
class BsqAmount {
  public:
    constexpr BsqAmount() = default;
    constexpr explicit BsqAmount(std::int64_t centi) : centi_(centi) {
        if (centi < 0) throw Error("negative BSQ amount");
    }

    constexpr std::int64_t centi() const { return centi_; }
    constexpr bool is_zero() const { return centi_ == 0; }

    /// Renders with exactly two fraction digits, e.g. 300000 -> "3000.00".
    std::string to_string() const;

    /// Parses a decimal string with up to two fraction digits ("3000", "3000.5",
    /// "3000.00"). Returns nothing for anything else (negatives included).
    static std::optional<BsqAmount> parse_decimal(std::string_view text);

    constexpr auto operator<=>(const BsqAmount&) const = default;

    constexpr BsqAmount operator+(BsqAmount other) const { return BsqAmount(centi_ + other.centi_); }
    /// Throws NegativeBurn when the result would be negative.
    BsqAmount checked_sub(BsqAmount other) const {
        if (other.centi_ > centi_) throw NegativeBurn("BSQ subtraction underflow");
        return BsqAmount(centi_ - other.centi_);
    }
    BsqAmount& operator+=(BsqAmount other) {
        centi_ += other.centi_;
        return *this;
    }

  private:
    std::int64_t centi_ = 0;
};

/// Satoshi amount of the uncolored bitcoin carried by the same inputs/outputs.
class SatAmount {
  public:
    constexpr SatAmount() = default;
    constexpr explicit SatAmount(std::int64_t sat) : sat_(sat) {
        if (sat < 0) throw Error("negative satoshi amount");
    }
    constexpr std::int64_t value() const { return sat_; }
    constexpr auto operator<=>(const SatAmount&) const = default;

  private:
    std::int64_t sat_ = 0;
};

}  // namespace bsq
