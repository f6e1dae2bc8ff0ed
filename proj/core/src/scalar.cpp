#include "skewlin/scalar.hpp"

#include <cctype>
#include <ostream>

namespace skewlin {

namespace {

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p % 2 == 0) return p == 2;
    if (p % 3 == 0) return p == 3;
    for (std::uint64_t d = 5; d <= p / d; d += 6) {
        if (p % d == 0 || p % (d + 2) == 0) return false;
    }
    return true;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    // extended Euclid; p prime, 0 < a < p
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p);
    return static_cast<std::uint64_t>(t);
}

Quaternion qmul(const Quaternion& x, const Quaternion& y) {
    return Quaternion{
        x.a * y.a - x.b * y.b - x.c * y.c - x.d * y.d,
        x.a * y.b + x.b * y.a + x.c * y.d - x.d * y.c,
        x.a * y.c - x.b * y.d + x.c * y.a + x.d * y.b,
        x.a * y.d + x.b * y.c - x.c * y.b + x.d * y.a,
    };
}

std::string rat_str(const Rat& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) {
        s += '/';
        s += denominator(r).str();
    }
    return s;
}

[[noreturn]] void bad_literal(const std::string& what) { throw parse_error(what, 0, 0); }

}  // namespace

ScalarDomain ScalarDomain::gf(std::uint64_t p) {
    if (p >= (std::uint64_t{1} << 63)) throw std::invalid_argument("prime modulus too large");
    if (!is_prime(p)) throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return ScalarDomain(DomainKind::prime_field, p);
}

ScalarDomain ScalarDomain::rationals() { return ScalarDomain(DomainKind::rationals, 0); }

ScalarDomain ScalarDomain::quaternions() { return ScalarDomain(DomainKind::quaternions, 0); }

std::uint64_t ScalarDomain::modulus() const {
    if (kind_ != DomainKind::prime_field) throw std::logic_error("modulus of a non prime field");
    return p_;
}

std::string ScalarDomain::name() const {
    switch (kind_) {
        case DomainKind::prime_field: return "gf " + std::to_string(p_);
        case DomainKind::rationals: return "q";
        case DomainKind::quaternions: return "quat";
    }
    return {};
}

Scalar Scalar::zero(const ScalarDomain& d) { return from_int(d, 0); }

Scalar Scalar::one(const ScalarDomain& d) { return from_int(d, 1); }

Scalar Scalar::from_int(const ScalarDomain& d, long long value) {
    switch (d.kind()) {
        case DomainKind::prime_field: {
            auto p = static_cast<std::int64_t>(d.modulus());
            std::int64_t r = value % p;
            if (r < 0) r += p;
            return Scalar(d, static_cast<std::uint64_t>(r));
        }
        case DomainKind::rationals: return Scalar(d, Rat(value));
        case DomainKind::quaternions:
            return Scalar(d, Quaternion{Rat(value), Rat(0), Rat(0), Rat(0)});
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::gf(std::uint64_t p, std::uint64_t residue) {
    auto d = ScalarDomain::gf(p);
    return Scalar(d, residue % p);
}

Scalar Scalar::rational(Rat value) { return Scalar(ScalarDomain::rationals(), std::move(value)); }

Scalar Scalar::quaternion(Rat a, Rat b, Rat c, Rat d) {
    return Scalar(ScalarDomain::quaternions(),
                  Quaternion{std::move(a), std::move(b), std::move(c), std::move(d)});
}

bool Scalar::is_zero() const {
    switch (dom_.kind()) {
        case DomainKind::prime_field: return std::get<std::uint64_t>(v_) == 0;
        case DomainKind::rationals: return std::get<Rat>(v_) == 0;
        case DomainKind::quaternions: {
            const auto& q = std::get<Quaternion>(v_);
            return q.a == 0 && q.b == 0 && q.c == 0 && q.d == 0;
        }
    }
    return false;
}

bool Scalar::is_one() const { return *this == one(dom_); }

std::uint64_t Scalar::residue() const { return std::get<std::uint64_t>(v_); }

const Rat& Scalar::rat() const { return std::get<Rat>(v_); }

const Quaternion& Scalar::quat() const { return std::get<Quaternion>(v_); }

namespace {

void require_same(const Scalar& a, const Scalar& b) {
    if (a.domain() != b.domain())
        throw domain_mismatch("scalars from " + a.domain().name() + " and " + b.domain().name());
}

}  // namespace

Scalar Scalar::operator-() const {
    switch (dom_.kind()) {
        case DomainKind::prime_field: {
            auto r = std::get<std::uint64_t>(v_);
            return Scalar(dom_, r == 0 ? 0 : dom_.modulus() - r);
        }
        case DomainKind::rationals: return Scalar(dom_, Rat(-std::get<Rat>(v_)));
        case DomainKind::quaternions: {
            const auto& q = std::get<Quaternion>(v_);
            return Scalar(dom_, Quaternion{-q.a, -q.b, -q.c, -q.d});
        }
    }
    throw std::logic_error("unreachable");
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw division_by_zero("inverse of zero in " + dom_.name());
    switch (dom_.kind()) {
        case DomainKind::prime_field:
            return Scalar(dom_, invmod(std::get<std::uint64_t>(v_), dom_.modulus()));
        case DomainKind::rationals: return Scalar(dom_, Rat(1 / std::get<Rat>(v_)));
        case DomainKind::quaternions: {
            // q^{-1} = conj(q) / N(q), N(q) = a^2+b^2+c^2+d^2 > 0 for q != 0.
            const auto& q = std::get<Quaternion>(v_);
            Rat n = q.a * q.a + q.b * q.b + q.c * q.c + q.d * q.d;
            return Scalar(dom_, Quaternion{q.a / n, -q.b / n, -q.c / n, -q.d / n});
        }
    }
    throw std::logic_error("unreachable");
}

Scalar operator+(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    switch (a.dom_.kind()) {
        case DomainKind::prime_field: {
            auto p = a.dom_.modulus();
            auto r = std::get<std::uint64_t>(a.v_) + std::get<std::uint64_t>(b.v_);
            if (r >= p) r -= p;
            return Scalar(a.dom_, r);
        }
        case DomainKind::rationals:
            return Scalar(a.dom_, Rat(std::get<Rat>(a.v_) + std::get<Rat>(b.v_)));
        case DomainKind::quaternions: {
            const auto& x = std::get<Quaternion>(a.v_);
            const auto& y = std::get<Quaternion>(b.v_);
            return Scalar(a.dom_, Quaternion{x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d});
        }
    }
    throw std::logic_error("unreachable");
}

Scalar operator-(const Scalar& a, const Scalar& b) { return a + (-b); }

Scalar operator*(const Scalar& a, const Scalar& b) {
    require_same(a, b);
    switch (a.dom_.kind()) {
        case DomainKind::prime_field:
            return Scalar(a.dom_, mulmod(std::get<std::uint64_t>(a.v_),
                                         std::get<std::uint64_t>(b.v_), a.dom_.modulus()));
        case DomainKind::rationals:
            return Scalar(a.dom_, Rat(std::get<Rat>(a.v_) * std::get<Rat>(b.v_)));
        case DomainKind::quaternions:
            return Scalar(a.dom_, qmul(std::get<Quaternion>(a.v_), std::get<Quaternion>(b.v_)));
    }
    throw std::logic_error("unreachable");
}

bool operator==(const Scalar& a, const Scalar& b) {
    if (a.dom_ != b.dom_) return false;
    return a.v_ == b.v_;
}

std::string Scalar::str() const {
    switch (dom_.kind()) {
        case DomainKind::prime_field: return std::to_string(std::get<std::uint64_t>(v_));
        case DomainKind::rationals: return rat_str(std::get<Rat>(v_));
        case DomainKind::quaternions: {
            const auto& q = std::get<Quaternion>(v_);
            std::string s = rat_str(q.a);
            auto append = [&s](const Rat& coeff, char unit) {
                if (coeff < 0) {
                    s += '-';
                    s += rat_str(Rat(-coeff));
                } else {
                    s += '+';
                    s += rat_str(coeff);
                }
                s += unit;
            };
            append(q.b, 'i');
            append(q.c, 'j');
            append(q.d, 'k');
            return s;
        }
    }
    return {};
}

namespace {

// [-]digits[/digits], cursor advanced past the literal.
Rat parse_rat_at(std::string_view text, std::size_t& pos, bool allow_sign) {
    std::size_t start = pos;
    bool neg = false;
    if (allow_sign && pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        neg = text[pos] == '-';
        ++pos;
    }
    std::size_t num_start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == num_start) bad_literal("expected digits in '" + std::string(text.substr(start)) + "'");
    BigInt num(std::string(text.substr(num_start, pos - num_start)));
    BigInt den = 1;
    if (pos < text.size() && text[pos] == '/') {
        ++pos;
        std::size_t den_start = pos;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
        if (pos == den_start) bad_literal("expected denominator digits");
        den = BigInt(std::string(text.substr(den_start, pos - den_start)));
        if (den == 0) bad_literal("zero denominator");
    }
    Rat r(num, den);
    return neg ? Rat(-r) : r;
}

}  // namespace

Scalar Scalar::parse(const ScalarDomain& d, std::string_view text) {
    if (text.empty()) bad_literal("empty scalar literal");
    switch (d.kind()) {
        case DomainKind::prime_field: {
            for (char ch : text)
                if (!std::isdigit(static_cast<unsigned char>(ch)))
                    bad_literal("bad residue '" + std::string(text) + "'");
            BigInt v{std::string(text)};
            return Scalar(d, static_cast<std::uint64_t>(v % d.modulus()));
        }
        case DomainKind::rationals: {
            std::size_t pos = 0;
            Rat r = parse_rat_at(text, pos, true);
            if (pos != text.size()) bad_literal("trailing characters in '" + std::string(text) + "'");
            return Scalar(d, std::move(r));
        }
        case DomainKind::quaternions: {
            Quaternion q{Rat(0), Rat(0), Rat(0), Rat(0)};
            std::size_t pos = 0;
            bool first = true;
            while (pos < text.size()) {
                bool neg = false;
                if (text[pos] == '+' || text[pos] == '-') {
                    neg = text[pos] == '-';
                    ++pos;
                } else if (!first) {
                    bad_literal("expected sign between quaternion terms");
                }
                bool has_coeff = pos < text.size() &&
                                 std::isdigit(static_cast<unsigned char>(text[pos]));
                Rat coeff = has_coeff ? parse_rat_at(text, pos, false) : Rat(1);
                char unit = 0;
                if (pos < text.size() &&
                    (text[pos] == 'i' || text[pos] == 'j' || text[pos] == 'k')) {
                    unit = text[pos];
                    ++pos;
                }
                if (!has_coeff && unit == 0)
                    bad_literal("bad quaternion term in '" + std::string(text) + "'");
                if (neg) coeff = -coeff;
                switch (unit) {
                    case 0: q.a += coeff; break;
                    case 'i': q.b += coeff; break;
                    case 'j': q.c += coeff; break;
                    case 'k': q.d += coeff; break;
                }
                first = false;
            }
            return Scalar(d, std::move(q));
        }
    }
    throw std::logic_error("unreachable");
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.str(); }

}  // namespace skewlin
