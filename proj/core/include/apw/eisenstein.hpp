#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>

#include "apw/errors.hpp"

namespace apw {

/**
 * EisensteinInt: numbers x + y*w where w^2 = w - 1.
 *
 * w is a primitive sixth root of unity, its conjugate is wbar = 1 - w,
 * and the norm form is N(x + y*w) = x^2 + x*y + y^2. All arithmetic is
 * exact on 64-bit signed coefficients; overflow throws OverflowError
 * instead of wrapping.
 */
struct EisensteinInt {
    std::int64_t x{0}; // coefficient of 1
    std::int64_t y{0}; // coefficient of w

    constexpr EisensteinInt() = default;
    constexpr EisensteinInt(std::int64_t x_, std::int64_t y_) : x(x_), y(y_) {}

    friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;

    EisensteinInt operator+(const EisensteinInt& o) const;
    EisensteinInt operator-(const EisensteinInt& o) const;
    EisensteinInt operator-() const;

    // (x1 + y1 w)(x2 + y2 w) reduced by w^2 = w - 1:
    //   (x1 x2 - y1 y2) + (x1 y2 + y1 x2 + y1 y2) w
    EisensteinInt operator*(const EisensteinInt& o) const;

    /// Image under w -> wbar = 1 - w, i.e. (x + y, -y).
    EisensteinInt conj() const;

    /// x^2 + x*y + y^2; equals (*this * conj()).x.
    std::int64_t norm() const;

    /// Coefficients (x', y') of the same element written as x' + y'*wbar.
    std::pair<std::int64_t, std::int64_t> wbar_coords() const;

    bool is_zero() const { return x == 0 && y == 0; }
};

/// The six units of Z[w] in canonical order: +1, -1, +w, -w, +wbar, -wbar.
/// Reports and BFS tie-breaks follow this order.
const std::array<EisensteinInt, 6>& unit_set();

/// Renders as "x+yw" with explicit signs: "-7+7w", "2-8w", "w", "0".
std::string to_string(const EisensteinInt& a);

/// Inverse of to_string; accepts the same grammar. Throws ParseError.
EisensteinInt parse_eisenstein(std::string_view text);

std::ostream& operator<<(std::ostream& os, const EisensteinInt& a);

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
std::int64_t neg(std::int64_t a);

} // namespace checked

} // namespace apw
