#include "apw/eisenstein.hpp"

#include <cctype>
#include <ostream>

namespace apw {

namespace checked {

std::int64_t add(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_add_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in addition");
    }
    return r;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in subtraction");
    }
    return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a, b, &r)) {
        throw OverflowError("integer overflow in multiplication");
    }
    return r;
}

std::int64_t neg(std::int64_t a) {
    return sub(0, a);
}

} // namespace checked

EisensteinInt EisensteinInt::operator+(const EisensteinInt& o) const {
    return {checked::add(x, o.x), checked::add(y, o.y)};
}

EisensteinInt EisensteinInt::operator-(const EisensteinInt& o) const {
    return {checked::sub(x, o.x), checked::sub(y, o.y)};
}

EisensteinInt EisensteinInt::operator-() const {
    return {checked::neg(x), checked::neg(y)};
}

EisensteinInt EisensteinInt::operator*(const EisensteinInt& o) const {
    const std::int64_t rx = checked::sub(checked::mul(x, o.x), checked::mul(y, o.y));
    const std::int64_t ry =
        checked::add(checked::add(checked::mul(x, o.y), checked::mul(y, o.x)), checked::mul(y, o.y));
    return {rx, ry};
}

EisensteinInt EisensteinInt::conj() const {
    return {checked::add(x, y), checked::neg(y)};
}

std::int64_t EisensteinInt::norm() const {
    return checked::add(checked::add(checked::mul(x, x), checked::mul(x, y)), checked::mul(y, y));
}

std::pair<std::int64_t, std::int64_t> EisensteinInt::wbar_coords() const {
    return {checked::add(x, y), checked::neg(y)};
}

const std::array<EisensteinInt, 6>& unit_set() {
    static const std::array<EisensteinInt, 6> units = {
        EisensteinInt{1, 0},  // +1
        EisensteinInt{-1, 0}, // -1
        EisensteinInt{0, 1},  // +w
        EisensteinInt{0, -1}, // -w
        EisensteinInt{1, -1}, // +wbar
        EisensteinInt{-1, 1}, // -wbar
    };
    return units;
}

std::string to_string(const EisensteinInt& a) {
    if (a.x == 0 && a.y == 0) {
        return "0";
    }
    std::string s;
    if (a.x != 0) {
        s += std::to_string(a.x);
    }
    if (a.y != 0) {
        if (a.y == 1) {
            s += a.x != 0 ? "+w" : "w";
        } else if (a.y == -1) {
            s += "-w";
        } else {
            if (a.y > 0 && a.x != 0) {
                s += '+';
            }
            s += std::to_string(a.y);
            s += 'w';
        }
    }
    return s;
}

namespace {

// One term of the "x+yw" grammar: [sign] (digits ['w'] | 'w').
struct Term {
    std::int64_t value;
    bool has_w;
};

bool parse_term(std::string_view& s, bool first, Term& out) {
    std::int64_t sign = 1;
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') {
            sign = -1;
        }
        ++i;
    } else if (!first) {
        return false; // later terms must carry an explicit sign
    }
    std::int64_t mag = 0;
    bool have_digits = false;
    bool overflow = false;
    while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
        have_digits = true;
        if (mag > (INT64_MAX - (s[i] - '0')) / 10) {
            overflow = true;
        } else {
            mag = mag * 10 + (s[i] - '0');
        }
        ++i;
    }
    bool has_w = false;
    if (i < s.size() && s[i] == 'w') {
        has_w = true;
        ++i;
    }
    if (!have_digits && !has_w) {
        return false;
    }
    if (overflow) {
        throw OverflowError("coefficient does not fit in 64 bits");
    }
    out.value = sign * (have_digits ? mag : 1);
    out.has_w = has_w;
    s.remove_prefix(i);
    return true;
}

} // namespace

EisensteinInt parse_eisenstein(std::string_view text) {
    std::string_view s = text;
    EisensteinInt result{0, 0};
    bool seen_plain = false;
    bool seen_w = false;
    Term t;
    for (bool first = true; !s.empty(); first = false) {
        if (!parse_term(s, first, t)) {
            throw ParseError("invalid element syntax: '" + std::string(text) + "'");
        }
        if (t.has_w) {
            if (seen_w) {
                throw ParseError("duplicate w term in '" + std::string(text) + "'");
            }
            seen_w = true;
            result.y = t.value;
        } else {
            if (seen_plain) {
                throw ParseError("duplicate integer term in '" + std::string(text) + "'");
            }
            seen_plain = true;
            result.x = t.value;
        }
    }
    if (!seen_plain && !seen_w) {
        throw ParseError("empty element text");
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& a) {
    return os << to_string(a);
}

} // namespace apw
