#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace nervekit {

using Rational = boost::multiprecision::cpp_rational;

/// An exact scalar in one of the supported coefficient fields.
/// Finite-field values are stored as residues in [0, p); rationals are kept
/// in canonical form (lowest terms, positive denominator) by cpp_rational.
class FieldScalar {
public:
    FieldScalar() : value_(std::int64_t{0}) {}
    explicit FieldScalar(std::int64_t residue) : value_(residue) {}
    explicit FieldScalar(Rational r) : value_(std::move(r)) {}

    bool is_residue() const { return std::holds_alternative<std::int64_t>(value_); }
    std::int64_t residue() const { return std::get<std::int64_t>(value_); }
    const Rational& rational() const { return std::get<Rational>(value_); }

    friend bool operator==(const FieldScalar& a, const FieldScalar& b) { return a.value_ == b.value_; }
    friend bool operator!=(const FieldScalar& a, const FieldScalar& b) { return !(a == b); }

private:
    std::variant<std::int64_t, Rational> value_;
};

/// A coefficient field: F2, Fp for an odd prime p, or the rationals Q.
/// All scalar arithmetic is routed through this class so that chains and
/// matrices can stay field-agnostic.
class FieldSpec {
public:
    enum class Kind { F2, Fp, Q };

    static FieldSpec f2();
    static FieldSpec fp(std::int64_t p);  // throws std::invalid_argument unless p is an odd prime
    static FieldSpec rationals();

    /// Accepts "f2", "q", or "f<p>" for an odd prime p (e.g. "f3", "f5").
    static FieldSpec parse(std::string_view name);

    Kind kind() const { return kind_; }
    /// Characteristic: p for finite fields, 0 for Q.
    std::int64_t characteristic() const { return kind_ == Kind::Q ? 0 : p_; }
    std::string name() const;

    FieldScalar zero() const;
    FieldScalar one() const;
    FieldScalar from_int(std::int64_t n) const;

    FieldScalar add(const FieldScalar& a, const FieldScalar& b) const;
    FieldScalar sub(const FieldScalar& a, const FieldScalar& b) const;
    FieldScalar mul(const FieldScalar& a, const FieldScalar& b) const;
    FieldScalar div(const FieldScalar& a, const FieldScalar& b) const;  // throws on zero divisor
    FieldScalar neg(const FieldScalar& a) const;
    FieldScalar inv(const FieldScalar& a) const;  // throws on zero

    bool is_zero(const FieldScalar& a) const;
    bool is_one(const FieldScalar& a) const;
    std::string to_string(const FieldScalar& a) const;

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind_ == b.kind_ && a.p_ == b.p_;
    }

private:
    FieldSpec(Kind kind, std::int64_t p) : kind_(kind), p_(p) {}

    Kind kind_;
    std::int64_t p_;  // modulus for finite fields, unused for Q
};

bool is_prime(std::int64_t n);

}  // namespace nervekit
