#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "zsr/groups.hpp"

namespace zsr {

using Rational = mpq_class;

/// Parses "a/b" or "a". A non-reduced fraction is an InputError unless
/// `normalize` is set; a zero denominator always is.
Rational parse_rational(const std::string& text, bool normalize = false);

/// Canonical text: "a/b" in lowest terms, or "a" for integers.
std::string format_rational(const Rational& q);

/// A probability measure on Z/p with exact weights.
class RationalMeasure {
public:
    /// Throws InputError on a length other than p, a negative weight, or a
    /// total other than 1.
    RationalMeasure(std::size_t p, std::vector<Rational> weights);

    static RationalMeasure dirac(std::size_t p, Element at);
    static RationalMeasure uniform(std::size_t p);

    std::size_t modulus() const { return weights_.size(); }
    const std::vector<Rational>& weights() const { return weights_; }
    const Rational& operator[](std::size_t x) const { return weights_[x]; }

    friend bool operator==(const RationalMeasure&, const RationalMeasure&) = default;

private:
    std::vector<Rational> weights_;
};

/// (mu + j)(x) = mu(x - j).
RationalMeasure shift_measure(const RationalMeasure& mu, Element j);

}  // namespace zsr
