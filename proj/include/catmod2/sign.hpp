#pragma once

#include <cstdint>
#include <ostream>
#include <stdexcept>

namespace catmod2 {

/// A value in {-1, +1}.
class Sign {
   public:
    constexpr Sign() noexcept = default;

    static constexpr Sign plus() noexcept { return Sign(1); }
    static constexpr Sign minus() noexcept { return Sign(-1); }

    /// (-1)^e, given only the parity of e.
    static constexpr Sign from_parity(bool odd) noexcept { return Sign(odd ? -1 : 1); }

    static constexpr Sign from_int(int v) {
        if (v != 1 && v != -1) throw std::domain_error("Sign::from_int: value must be +1 or -1");
        return Sign(static_cast<std::int8_t>(v));
    }

    constexpr int value() const noexcept { return v_; }
    constexpr bool negative() const noexcept { return v_ < 0; }

    constexpr Sign operator-() const noexcept { return Sign(static_cast<std::int8_t>(-v_)); }
    constexpr Sign operator*(Sign o) const noexcept { return Sign(static_cast<std::int8_t>(v_ * o.v_)); }
    constexpr Sign& operator*=(Sign o) noexcept {
        v_ = static_cast<std::int8_t>(v_ * o.v_);
        return *this;
    }
    constexpr bool operator==(const Sign&) const noexcept = default;

   private:
    constexpr explicit Sign(int v) noexcept : v_(static_cast<std::int8_t>(v)) {}
    std::int8_t v_ = 1;
};

inline std::ostream& operator<<(std::ostream& os, Sign s) { return os << s.value(); }

/// (-1)^binom(n, 2), from n mod 4.
constexpr Sign binom2_sign(std::uint64_t n) noexcept { return Sign::from_parity((n & 3u) >= 2); }

}  // namespace catmod2
