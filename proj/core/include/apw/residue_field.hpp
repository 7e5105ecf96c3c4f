#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "apw/eisenstein.hpp"
#include "apw/errors.hpp"

namespace apw {

/// GF(p) label of a residue class, in [0, p).
using Label = std::int32_t;

/// Largest supported prime. Keeps the O(p) tables and the exhaustive
/// O(p^2)/O(p^3) audits at desk scale.
inline constexpr std::int64_t kMaxPrime = 49999;

/// The split prime pi = a + b*w with N(pi) = p, canonicalized so that
/// 0 < a <= b (the unique such associate). Throws NotSplittingPrime when
/// p is not a prime congruent to 1 mod 6 with p >= 7, LimitExceeded when
/// p > kMaxPrime.
EisensteinInt split_prime(std::int64_t p);

/// The unique r in [0, p) with a + b*r = 0 (mod p), i.e. r = -a * b^-1.
/// The labeling below sends the class of w to r.
std::int64_t label_ratio(std::int64_t p, const EisensteinInt& pi);

/// mu(l) with its preferred presentation: the w-form (x, y) when
/// |x|+|y| <= |x'|+|y'|, otherwise the wbar-form (x', y').
struct MuValue {
    EisensteinInt element;
    bool wbar_form;
};

/**
 * The residue field A_p[w] = Z[w]/<pi> for a prime p = 1 (mod 6).
 *
 * Labels l in GF(p) correspond to residue classes via x + r*y = l (mod p);
 * rep(l) is the minimal-norm element of the class (ties broken by smallest
 * (norm, x, y)). beta is the smallest-label primitive element whose n-th
 * power is the class of w, where n = (p-1)/6; dlog is its discrete-log
 * table. Instances are immutable after build() and safe to share across
 * threads.
 */
class ResidueField {
public:
    static ResidueField build(std::int64_t p);

    std::int64_t p() const { return p_; }
    std::int64_t n() const { return (p_ - 1) / 6; }
    const EisensteinInt& pi() const { return pi_; }
    std::int64_t r() const { return r_; }
    Label beta() const { return beta_; }
    int tie_count() const { return tie_count_; }

    const std::vector<EisensteinInt>& rep_table() const { return rep_; }

    /// Minimal-norm representative of class l. Throws LabelOutOfRange.
    const EisensteinInt& rep(Label l) const;

    MuValue mu(Label l) const;

    /// (a.x + r*a.y) mod p for any ring element; never overflows.
    Label label_of(const EisensteinInt& a) const;

    // Field arithmetic on labels. Labels add and multiply exactly as
    // integers mod p (the labeling is a ring isomorphism onto GF(p)).
    Label add(Label a, Label b) const;
    Label sub(Label a, Label b) const;
    Label neg(Label a) const;
    Label mul(Label a, Label b) const;
    Label inv(Label a) const; // throws DivisionByZero on 0
    Label pow(Label base, std::int64_t exponent) const;

    /// Exponent m in [0, p-2] with beta^m = l. Throws DlogOfZero on 0.
    std::int64_t dlog(Label l) const;

    /// Labels of +1, -1, +w, -w, +wbar, -wbar (canonical unit order).
    const std::array<Label, 6>& unit_labels() const { return unit_labels_; }

    /// CSV export, header "label,x,y,x_bar,y_bar,norm".
    void write_csv(std::ostream& os) const;

    /// Summary JSON: {"p", "n", "pi", "r", "beta_label", "tie_count"}.
    std::string summary_json() const;

private:
    ResidueField() = default;
    void check_label(Label l) const;

    std::int64_t p_{0};
    EisensteinInt pi_;
    std::int64_t r_{0};
    Label beta_{0};
    int tie_count_{0};
    std::vector<EisensteinInt> rep_;
    std::vector<std::int32_t> log_; // log_[l] = dlog of l, for l >= 1
    std::array<Label, 6> unit_labels_{};
};

} // namespace apw
