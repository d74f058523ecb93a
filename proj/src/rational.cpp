#include "comprelie/rational.hpp"

#include "comprelie/error.hpp"

#include <cctype>
#include <ostream>

namespace comprelie {

namespace mp = boost::multiprecision;

namespace {

// cpp_rational's two-argument constructor rejects negative denominators,
// so signs are normalized here first.
mp::cpp_rational make_ratio(Rational::Int num, Rational::Int den) {
    if (den.is_zero()) {
        throw input_error("rational with zero denominator");
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return mp::cpp_rational(num, den);
}

bool valid_integer_token(std::string_view s) {
    if (!s.empty() && s.front() == '-') {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch))) {
            return false;
        }
    }
    return true;
}

}  // namespace

Rational::Rational(const Int& num, const Int& den) : value_(make_ratio(num, den)) {}

Rational::Rational(long long num, long long den) : value_(make_ratio(Int(num), Int(den))) {}

Rational Rational::parse(std::string_view text) {
    std::string_view num_part = text;
    std::string_view den_part;
    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        num_part = text.substr(0, slash);
        den_part = text.substr(slash + 1);
        if (!valid_integer_token(den_part)) {
            throw input_error("malformed rational \"" + std::string(text) + "\"");
        }
    }
    if (!valid_integer_token(num_part)) {
        throw input_error("malformed rational \"" + std::string(text) + "\"");
    }
    Int num{std::string(num_part)};
    Int den = den_part.empty() ? Int(1) : Int(std::string(den_part));
    if (den.is_zero()) {
        throw input_error("rational with zero denominator: \"" + std::string(text) + "\"");
    }
    Rational out;
    out.value_ = make_ratio(num, den);
    return out;
}

Rational::Int Rational::numerator() const { return mp::numerator(value_); }

Rational::Int Rational::denominator() const { return mp::denominator(value_); }

std::string Rational::str() const {
    Int den = denominator();
    if (den == 1) {
        return numerator().str();
    }
    return numerator().str() + "/" + den.str();
}

Rational Rational::operator-() const {
    Rational out;
    out.value_ = -value_;
    return out;
}

Rational& Rational::operator+=(const Rational& o) {
    value_ += o.value_;
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    value_ -= o.value_;
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    value_ *= o.value_;
    return *this;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw input_error("rational division by zero");
    }
    value_ /= o.value_;
    return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace comprelie
