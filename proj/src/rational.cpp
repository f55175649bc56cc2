#include "zsr/rational.hpp"

#include <cctype>

#include "zsr/error.hpp"

namespace zsr {
namespace {

bool integer_text(const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

}  // namespace

Rational parse_rational(const std::string& text, bool normalize) {
    const auto slash = text.find('/');
    const std::string num = text.substr(0, slash);
    const std::string den = slash == std::string::npos ? "1" : text.substr(slash + 1);
    if (!integer_text(num, true) || !integer_text(den, false))
        throw InputError("malformed rational \"" + text + "\"");
    mpz_class n(num[0] == '+' ? num.substr(1) : num, 10);
    mpz_class d(den, 10);
    if (d == 0) throw InputError("rational \"" + text + "\" has a zero denominator");
    Rational q(n, d);
    q.canonicalize();
    if (!normalize && (q.get_num() != n || q.get_den() != d))
        throw InputError("rational \"" + text + "\" is not in lowest terms (use " + format_rational(q) + ")");
    return q;
}

std::string format_rational(const Rational& value) {
    Rational q = value;
    q.canonicalize();
    if (q.get_den() == 1) return q.get_num().get_str();
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

RationalMeasure::RationalMeasure(std::size_t p, std::vector<Rational> weights) : weights_(std::move(weights)) {
    if (p == 0) throw InputError("measure needs a positive modulus");
    if (weights_.size() != p)
        throw InputError("measure on Z/" + std::to_string(p) + " has " + std::to_string(weights_.size()) +
                         " weights");
    Rational total = 0;
    for (std::size_t x = 0; x < p; ++x) {
        if (weights_[x] < 0) throw InputError("weight " + std::to_string(x) + " is negative");
        total += weights_[x];
    }
    if (total != 1) throw InputError("weights sum to " + format_rational(total) + ", not 1");
}

RationalMeasure RationalMeasure::dirac(std::size_t p, Element at) {
    if (at >= p) throw InputError("Dirac point outside Z/p");
    std::vector<Rational> w(p, Rational(0));
    w[at] = 1;
    return RationalMeasure(p, std::move(w));
}

RationalMeasure RationalMeasure::uniform(std::size_t p) {
    return RationalMeasure(p, std::vector<Rational>(p, Rational(mpz_class(1), mpz_class(p))));
}

RationalMeasure shift_measure(const RationalMeasure& mu, Element j) {
    const std::size_t p = mu.modulus();
    std::vector<Rational> w(p);
    for (std::size_t x = 0; x < p; ++x) w[(x + j) % p] = mu[x];
    return RationalMeasure(p, std::move(w));
}

}  // namespace zsr
