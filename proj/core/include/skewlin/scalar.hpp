#pragma once

// Exact scalar arithmetic in a division ring: prime fields GF(p), the
// rationals, and rational quaternions.  The quaternions are the
// noncommutative test bed -- every finite division ring is a field, so a
// faithful noncommutative domain has to be infinite and we keep it exact
// with big-integer fractions.

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

#include <boost/multiprecision/cpp_int.hpp>

#include "skewlin/error.hpp"

namespace skewlin {

using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

enum class DomainKind { prime_field, rationals, quaternions };

/// Handle for the division ring scalars live in.  Cheap value type; every
/// Scalar, Vec and LinMap carries one and operations demand equal handles.
class ScalarDomain {
   public:
    /// GF(p).  p is checked prime by trial division; p must be < 2^63.
    static ScalarDomain gf(std::uint64_t p);
    static ScalarDomain rationals();
    static ScalarDomain quaternions();

    DomainKind kind() const { return kind_; }
    std::uint64_t modulus() const;  // prime_field only
    bool commutative() const { return kind_ != DomainKind::quaternions; }

    /// Header token form: "gf <p>", "q", "quat".
    std::string name() const;

    friend bool operator==(const ScalarDomain& a, const ScalarDomain& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }
    friend bool operator!=(const ScalarDomain& a, const ScalarDomain& b) { return !(a == b); }

   private:
    ScalarDomain(DomainKind k, std::uint64_t p) : kind_(k), p_(p) {}
    DomainKind kind_;
    std::uint64_t p_;
};

/// a + b*i + c*j + k*d with rational components; Hamilton product.
struct Quaternion {
    Rat a, b, c, d;
    bool operator==(const Quaternion&) const = default;
};

class Scalar {
   public:
    static Scalar zero(const ScalarDomain& d);
    static Scalar one(const ScalarDomain& d);
    /// Embeds a machine integer (reduced mod p for prime fields, real part
    /// for quaternions).
    static Scalar from_int(const ScalarDomain& d, long long value);
    static Scalar gf(std::uint64_t p, std::uint64_t residue);
    static Scalar rational(Rat value);
    static Scalar quaternion(Rat a, Rat b, Rat c, Rat d);

    const ScalarDomain& domain() const { return dom_; }
    bool is_zero() const;
    bool is_one() const;

    Scalar operator-() const;
    Scalar inverse() const;  // throws division_by_zero on zero input

    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);

    /// Exact equality; scalars from different domains are never equal.
    friend bool operator==(const Scalar& a, const Scalar& b);
    friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

    /// Canonical literal (round-trips through parse).
    std::string str() const;
    /// Parses one literal belonging to `d`; grammar matches str().
    static Scalar parse(const ScalarDomain& d, std::string_view text);

    std::uint64_t residue() const;     // prime_field payload
    const Rat& rat() const;            // rationals payload
    const Quaternion& quat() const;    // quaternions payload

   private:
    Scalar(ScalarDomain d, std::variant<std::uint64_t, Rat, Quaternion> v)
        : dom_(d), v_(std::move(v)) {}
    ScalarDomain dom_;
    std::variant<std::uint64_t, Rat, Quaternion> v_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace skewlin
