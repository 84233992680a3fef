#include "qmap/scalars.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "qmap/error.hpp"

namespace qmap {

Rational make_rational(long num, long den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

CycScalar::CycScalar(Rational re, Rational om) : re_(std::move(re)), om_(std::move(om)) {
    re_.canonicalize();
    om_.canonicalize();
}

Rational CycScalar::norm() const { return re_ * re_ - re_ * om_ + om_ * om_; }

CycScalar CycScalar::conj() const { return {re_ - om_, -om_}; }

CycScalar CycScalar::inv() const {
    if (is_zero()) throw DivisionByZero("inverse of zero in Q(w)");
    if (sgn(om_) == 0) return Rational(1 / re_);
    const Rational n = norm();
    const CycScalar c = conj();
    return {c.re_ / n, c.om_ / n};
}

CycScalar CycScalar::pow(long n) const {
    if (n < 0) return inv().pow(-n);
    CycScalar base = *this;
    CycScalar result(1);
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

CycScalar& CycScalar::operator+=(const CycScalar& rhs) {
    re_ += rhs.re_;
    om_ += rhs.om_;
    return *this;
}

CycScalar& CycScalar::operator-=(const CycScalar& rhs) {
    re_ -= rhs.re_;
    om_ -= rhs.om_;
    return *this;
}

CycScalar& CycScalar::operator*=(const CycScalar& rhs) {
    if (sgn(om_) == 0 && sgn(rhs.om_) == 0) {
        re_ *= rhs.re_;
        return *this;
    }
    // (a + bω)(c + dω) = (ac − bd) + (ad + bc − bd)ω
    const Rational bd = om_ * rhs.om_;
    Rational re = re_ * rhs.re_ - bd;
    Rational om = re_ * rhs.om_ + om_ * rhs.re_ - bd;
    re_ = std::move(re);
    om_ = std::move(om);
    return *this;
}

CycScalar& CycScalar::operator/=(const CycScalar& rhs) {
    if (rhs.is_zero()) throw DivisionByZero("division by zero in Q(w)");
    if (sgn(om_) == 0 && sgn(rhs.om_) == 0) {
        re_ /= rhs.re_;
        return *this;
    }
    return *this *= rhs.inv();
}

CycScalar CycScalar::operator-() const { return {-re_, -om_}; }

std::complex<double> CycScalar::to_complex() const {
    const double a = re_.get_d();
    const double b = om_.get_d();
    return {a - 0.5 * b, b * (std::sqrt(3.0) / 2.0)};
}

namespace {

std::string rational_str(const Rational& r) {
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

Rational parse_rational(std::string_view text, std::string_view whole) {
    if (text.empty()) throw ParseError("empty rational in scalar '" + std::string(whole) + "'");
    const std::string s(text);
    for (std::size_t i = 0; i < s.size(); ++i) {
        const char c = s[i];
        const bool sign_ok = (c == '-' || c == '+') && (i == 0 || s[i - 1] == '/');
        if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && !sign_ok) {
            throw ParseError("malformed scalar '" + std::string(whole) + "'");
        }
    }
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(mpz_class(s[0] == '+' ? s.substr(1) : s));
        }
        std::string num = s.substr(0, slash);
        std::string den = s.substr(slash + 1);
        if (!num.empty() && num[0] == '+') num.erase(0, 1);
        if (num.empty() || den.empty()) throw ParseError("malformed scalar '" + std::string(whole) + "'");
        mpz_class d(den);
        if (d == 0) throw DivisionByZero("zero denominator in '" + std::string(whole) + "'");
        Rational r(mpz_class(num), d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed scalar '" + std::string(whole) + "'");
    }
}

}  // namespace

std::string CycScalar::str() const {
    std::string out = rational_str(re_);
    if (sgn(om_) != 0) {
        if (sgn(om_) > 0) out += "+";
        out += rational_str(om_) + "*w";
    }
    return out;
}

CycScalar CycScalar::parse(std::string_view text) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    if (s.empty()) throw ParseError("empty scalar");

    // Split at the last top-level sign that starts the ω term, if any.
    const auto w = s.find('w');
    if (w == std::string::npos) return parse_rational(s, text);
    if (w != s.size() - 1 || s.find('w') != s.rfind('w')) {
        throw ParseError("malformed scalar '" + std::string(text) + "'");
    }
    std::string head = s.substr(0, w);
    if (!head.empty() && head.back() == '*') head.pop_back();

    // Locate the sign separating re from the ω coefficient (not one following '/').
    std::size_t split = std::string::npos;
    for (std::size_t i = head.size(); i-- > 1;) {
        if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '/') {
            split = i;
            break;
        }
    }
    std::string re_part = split == std::string::npos ? std::string() : head.substr(0, split);
    std::string om_part = split == std::string::npos ? head : head.substr(split);
    if (om_part.empty() || om_part == "+") om_part = "1";
    if (om_part == "-") om_part = "-1";
    Rational re = re_part.empty() ? Rational(0) : parse_rational(re_part, text);
    return {re, parse_rational(om_part, text)};
}

std::ostream& operator<<(std::ostream& os, const CycScalar& s) { return os << s.str(); }

QParam::QParam(CycScalar q, int max_order) : q_(std::move(q)), max_order_(max_order) {
    if (max_order_ < 1) throw InvalidArgument("QParam max_order must be positive");
    if (q_.is_zero()) throw InvalidArgument("q must be nonzero");
    // A norm different from 1 rules out roots of unity at once.
    if (q_.norm() != 1) return;
    CycScalar power(1);
    for (int n = 1; n <= max_order_; ++n) {
        power *= q_;
        if (power.is_one()) {
            throw InvalidArgument("q is a root of unity: q^" + std::to_string(n) + " = 1");
        }
    }
}

CycScalar QParam::bracket(int n) const {
    if (n < 0 || n > max_order_ + 1) {
        throw InvalidArgument("q-number [" + std::to_string(n) + "]_q outside validated range");
    }
    CycScalar sum(0);
    CycScalar power(1);
    for (int i = 0; i < n; ++i) {
        sum += power;
        power *= q_;
    }
    return sum;
}

}  // namespace qmap
