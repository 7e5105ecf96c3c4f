#include "apw/residue_field.hpp"

#include <cassert>
#include <cmath>
#include <limits>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace apw {

namespace {

bool is_prime(std::int64_t p) {
    if (p < 2) {
        return false;
    }
    if (p % 2 == 0) {
        return p == 2;
    }
    for (std::int64_t d = 3; d * d <= p; d += 2) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

std::int64_t isqrt_floor(std::int64_t v) {
    std::int64_t s = static_cast<std::int64_t>(std::sqrt(static_cast<double>(v)));
    while (s > 0 && s * s > v) {
        --s;
    }
    while ((s + 1) * (s + 1) <= v) {
        ++s;
    }
    return s;
}

std::int64_t mod_p(std::int64_t v, std::int64_t p) {
    v %= p;
    return v < 0 ? v + p : v;
}

// Modular inverse via extended Euclid; m prime, 0 < a < m.
std::int64_t mod_inverse(std::int64_t a, std::int64_t m) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = m, new_r = a;
    while (new_r != 0) {
        const std::int64_t q = r / new_r;
        std::swap(t -= q * new_t, new_t);
        std::swap(r -= q * new_r, new_r);
    }
    assert(r == 1);
    return mod_p(t, m);
}

void validate_prime(std::int64_t p) {
    if (p > kMaxPrime) {
        throw LimitExceeded("p = " + std::to_string(p) + " exceeds the supported maximum " +
                            std::to_string(kMaxPrime));
    }
    if (p < 7 || p % 6 != 1 || !is_prime(p)) {
        throw NotSplittingPrime("p = " + std::to_string(p) +
                                " is not a prime congruent to 1 (mod 6) with p >= 7");
    }
}

} // namespace

EisensteinInt split_prime(std::int64_t p) {
    validate_prime(p);
    // N(a+bw) = a^2 + ab + b^2 = p with 0 < a <= b forces 3a^2 <= p;
    // for each a the other coefficient solves b = (-a + sqrt(4p - 3a^2)) / 2.
    for (std::int64_t a = 1; 3 * a * a <= p; ++a) {
        const std::int64_t disc = 4 * p - 3 * a * a;
        const std::int64_t s = isqrt_floor(disc);
        if (s * s != disc || (s - a) % 2 != 0) {
            continue;
        }
        const std::int64_t b = (s - a) / 2;
        if (b >= a && a * a + a * b + b * b == p) {
            return {a, b};
        }
    }
    // Unreachable: every prime p = 1 (mod 6) is represented by the form.
    throw std::logic_error("split_prime: no representation found for p = " + std::to_string(p));
}

std::int64_t label_ratio(std::int64_t p, const EisensteinInt& pi) {
    if (pi.norm() != p) {
        throw std::invalid_argument("label_ratio: N(pi) != p");
    }
    const std::int64_t a = mod_p(pi.x, p);
    const std::int64_t b = mod_p(pi.y, p); // nonzero: p | b would force p | a and then p^2 | N(pi)
    const std::int64_t r = mod_p(-(a * mod_inverse(b, p)) % p, p);
    assert(mod_p(a + b * r, p) == 0);
    return r;
}

ResidueField ResidueField::build(std::int64_t p) {
    validate_prime(p);
    ResidueField f;
    f.p_ = p;
    f.pi_ = split_prime(p);
    f.r_ = label_ratio(p, f.pi_);

    // Minimal-norm representatives: every class has an element with
    // N <= p/3 (covering radius of the scaled hexagonal lattice), which
    // confines coordinates to this box. Scan it exhaustively, keeping the
    // smallest (norm, x, y) per label and counting norm ties.
    const std::int64_t box = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(p / 3.0))) + 1;
    f.rep_.assign(static_cast<std::size_t>(p), EisensteinInt{});
    std::vector<std::int64_t> best_norm(static_cast<std::size_t>(p),
                                        std::numeric_limits<std::int64_t>::max());
    std::vector<std::int32_t> min_count(static_cast<std::size_t>(p), 0);
    for (std::int64_t x = -box; x <= box; ++x) {
        for (std::int64_t y = -box; y <= box; ++y) {
            const auto l = static_cast<std::size_t>(mod_p(x + f.r_ * y, p));
            const std::int64_t norm = x * x + x * y + y * y;
            if (norm < best_norm[l]) {
                best_norm[l] = norm;
                f.rep_[l] = {x, y};
                min_count[l] = 1;
            } else if (norm == best_norm[l]) {
                ++min_count[l];
                const EisensteinInt cand{x, y};
                const EisensteinInt& cur = f.rep_[l];
                if (cand.x < cur.x || (cand.x == cur.x && cand.y < cur.y)) {
                    f.rep_[l] = cand;
                }
            }
        }
    }
    for (std::int64_t l = 0; l < p; ++l) {
        const auto idx = static_cast<std::size_t>(l);
        if (best_norm[idx] == std::numeric_limits<std::int64_t>::max()) {
            throw std::logic_error("build_field: class without representative");
        }
        if (3 * best_norm[idx] > p) {
            throw std::logic_error("build_field: representative outside covering radius");
        }
        if (f.label_of(f.rep_[idx]) != l) {
            throw std::logic_error("build_field: label round-trip failed");
        }
        if (min_count[idx] > 1) {
            ++f.tie_count_;
        }
    }
    if (!f.rep_[0].is_zero()) {
        throw std::logic_error("build_field: rep of class 0 is not 0");
    }

    for (std::size_t i = 0; i < 6; ++i) {
        f.unit_labels_[i] = f.label_of(unit_set()[i]);
        for (std::size_t j = 0; j < i; ++j) {
            if (f.unit_labels_[i] == f.unit_labels_[j]) {
                throw std::logic_error("build_field: unit classes not distinct");
            }
        }
    }

    // beta: smallest label of multiplicative order p-1 whose n-th power is
    // the class of w. One always exists: if a generator g has g^n = wbar
    // then g^-1 is a generator with (g^-1)^n = w.
    const std::int64_t n = (p - 1) / 6;
    const Label w_label = static_cast<Label>(f.r_); // label of 0 + 1*w
    std::vector<std::int64_t> prime_factors;
    {
        std::int64_t m = p - 1;
        for (std::int64_t d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                prime_factors.push_back(d);
                while (m % d == 0) {
                    m /= d;
                }
            }
        }
        if (m > 1) {
            prime_factors.push_back(m);
        }
    }
    f.beta_ = 0;
    for (std::int64_t cand = 2; cand < p; ++cand) {
        bool generator = true;
        for (const std::int64_t q : prime_factors) {
            if (f.pow(static_cast<Label>(cand), (p - 1) / q) == 1) {
                generator = false;
                break;
            }
        }
        if (generator && f.pow(static_cast<Label>(cand), n) == w_label) {
            f.beta_ = static_cast<Label>(cand);
            break;
        }
    }
    if (f.beta_ == 0) {
        throw std::logic_error("build_field: no primitive element with beta^n = w");
    }

    f.log_.assign(static_cast<std::size_t>(p), -1);
    Label power = 1;
    for (std::int64_t m = 0; m < p - 1; ++m) {
        f.log_[static_cast<std::size_t>(power)] = static_cast<std::int32_t>(m);
        power = f.mul(power, f.beta_);
    }
    return f;
}

void ResidueField::check_label(Label l) const {
    if (l < 0 || l >= p_) {
        throw LabelOutOfRange("label " + std::to_string(l) + " out of range [0, " +
                              std::to_string(p_) + ")");
    }
}

const EisensteinInt& ResidueField::rep(Label l) const {
    check_label(l);
    return rep_[static_cast<std::size_t>(l)];
}

MuValue ResidueField::mu(Label l) const {
    const EisensteinInt& e = rep(l);
    const auto [xp, yp] = e.wbar_coords();
    const bool wbar = std::abs(e.x) + std::abs(e.y) > std::abs(xp) + std::abs(yp);
    return {e, wbar};
}

Label ResidueField::label_of(const EisensteinInt& a) const {
    const __int128 v = static_cast<__int128>(a.x) + static_cast<__int128>(r_) * a.y;
    auto m = static_cast<std::int64_t>(v % p_);
    if (m < 0) {
        m += p_;
    }
    return static_cast<Label>(m);
}

Label ResidueField::add(Label a, Label b) const {
    check_label(a);
    check_label(b);
    const std::int64_t s = static_cast<std::int64_t>(a) + b;
    return static_cast<Label>(s >= p_ ? s - p_ : s);
}

Label ResidueField::sub(Label a, Label b) const {
    check_label(a);
    check_label(b);
    const std::int64_t s = static_cast<std::int64_t>(a) - b;
    return static_cast<Label>(s < 0 ? s + p_ : s);
}

Label ResidueField::neg(Label a) const {
    check_label(a);
    return a == 0 ? 0 : static_cast<Label>(p_ - a);
}

Label ResidueField::mul(Label a, Label b) const {
    check_label(a);
    check_label(b);
    return static_cast<Label>(static_cast<std::int64_t>(a) * b % p_);
}

Label ResidueField::inv(Label a) const {
    check_label(a);
    if (a == 0) {
        throw DivisionByZero("field_inv(0)");
    }
    return static_cast<Label>(mod_inverse(a, p_));
}

Label ResidueField::pow(Label base, std::int64_t exponent) const {
    check_label(base);
    if (exponent < 0) {
        return pow(inv(base), -exponent);
    }
    std::int64_t result = 1;
    std::int64_t b = base;
    while (exponent > 0) {
        if (exponent & 1) {
            result = result * b % p_;
        }
        b = b * b % p_;
        exponent >>= 1;
    }
    return static_cast<Label>(result);
}

std::int64_t ResidueField::dlog(Label l) const {
    check_label(l);
    if (l == 0) {
        throw DlogOfZero("discrete log of zero");
    }
    return log_[static_cast<std::size_t>(l)];
}

void ResidueField::write_csv(std::ostream& os) const {
    os << "label,x,y,x_bar,y_bar,norm\n";
    for (std::int64_t l = 0; l < p_; ++l) {
        const EisensteinInt& e = rep_[static_cast<std::size_t>(l)];
        const auto [xb, yb] = e.wbar_coords();
        os << l << ',' << e.x << ',' << e.y << ',' << xb << ',' << yb << ',' << e.norm() << '\n';
    }
}

std::string ResidueField::summary_json() const {
    nlohmann::json j;
    j["p"] = p_;
    j["n"] = n();
    j["pi"] = {pi_.x, pi_.y};
    j["r"] = r_;
    j["beta_label"] = beta_;
    j["tie_count"] = tie_count_;
    return j.dump();
}

} // namespace apw
