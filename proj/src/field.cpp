#include "nervekit/field.hpp"

#include <charconv>
#include <stdexcept>

namespace nervekit {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::int64_t d = 3; d * d <= n; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::f2() { return FieldSpec(Kind::F2, 2); }

FieldSpec FieldSpec::fp(std::int64_t p) {
    if (p == 2) return f2();
    if (!is_prime(p)) throw std::invalid_argument("FieldSpec: modulus " + std::to_string(p) + " is not prime");
    return FieldSpec(Kind::Fp, p);
}

FieldSpec FieldSpec::rationals() { return FieldSpec(Kind::Q, 0); }

FieldSpec FieldSpec::parse(std::string_view name) {
    if (name == "q" || name == "Q") return rationals();
    if (name.size() >= 2 && (name[0] == 'f' || name[0] == 'F')) {
        std::int64_t p = 0;
        auto rest = name.substr(1);
        auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), p);
        if (ec == std::errc() && ptr == rest.data() + rest.size()) return fp(p);
    }
    throw std::invalid_argument("FieldSpec: cannot parse field name '" + std::string(name) + "'");
}

std::string FieldSpec::name() const {
    switch (kind_) {
        case Kind::F2: return "f2";
        case Kind::Fp: return "f" + std::to_string(p_);
        case Kind::Q: return "q";
    }
    return "?";
}

FieldScalar FieldSpec::zero() const {
    return kind_ == Kind::Q ? FieldScalar(Rational(0)) : FieldScalar(std::int64_t{0});
}

FieldScalar FieldSpec::one() const {
    return kind_ == Kind::Q ? FieldScalar(Rational(1)) : FieldScalar(std::int64_t{1});
}

FieldScalar FieldSpec::from_int(std::int64_t n) const {
    if (kind_ == Kind::Q) return FieldScalar(Rational(n));
    std::int64_t r = n % p_;
    if (r < 0) r += p_;
    return FieldScalar(r);
}

FieldScalar FieldSpec::add(const FieldScalar& a, const FieldScalar& b) const {
    if (kind_ == Kind::Q) return FieldScalar(a.rational() + b.rational());
    return FieldScalar((a.residue() + b.residue()) % p_);
}

FieldScalar FieldSpec::sub(const FieldScalar& a, const FieldScalar& b) const {
    if (kind_ == Kind::Q) return FieldScalar(a.rational() - b.rational());
    return FieldScalar((a.residue() - b.residue() + p_) % p_);
}

FieldScalar FieldSpec::mul(const FieldScalar& a, const FieldScalar& b) const {
    if (kind_ == Kind::Q) return FieldScalar(a.rational() * b.rational());
    return FieldScalar((a.residue() * b.residue()) % p_);
}

FieldScalar FieldSpec::div(const FieldScalar& a, const FieldScalar& b) const {
    return mul(a, inv(b));
}

FieldScalar FieldSpec::neg(const FieldScalar& a) const {
    if (kind_ == Kind::Q) return FieldScalar(-a.rational());
    return FieldScalar((p_ - a.residue()) % p_);
}

FieldScalar FieldSpec::inv(const FieldScalar& a) const {
    if (is_zero(a)) throw std::domain_error("FieldSpec: division by zero");
    if (kind_ == Kind::Q) return FieldScalar(Rational(1) / a.rational());
    // extended Euclid
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a.residue();
    while (new_r != 0) {
        std::int64_t q = r / new_r;
        std::int64_t tmp = t - q * new_t;
        t = new_t; new_t = tmp;
        tmp = r - q * new_r;
        r = new_r; new_r = tmp;
    }
    if (t < 0) t += p_;
    return FieldScalar(t);
}

bool FieldSpec::is_zero(const FieldScalar& a) const {
    return kind_ == Kind::Q ? a.rational().is_zero() : a.residue() == 0;
}

bool FieldSpec::is_one(const FieldScalar& a) const {
    return kind_ == Kind::Q ? a.rational() == 1 : a.residue() == 1;
}

std::string FieldSpec::to_string(const FieldScalar& a) const {
    if (kind_ == Kind::Q) return a.rational().str();
    return std::to_string(a.residue());
}

}  // namespace nervekit
