#include "ta/scalar.hpp"

#include <cctype>

namespace ta {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

// Extended Euclid on the residue; p prime guarantees invertibility of
// nonzero inputs.
std::uint64_t invmod(std::uint64_t a, std::uint64_t p) {
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p), new_r = static_cast<std::int64_t>(a % p);
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

} // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    // Deterministic witness set for 64-bit inputs.
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

Field Field::prime(std::uint64_t p) {
    if (!is_prime_u64(p)) throw ParseError("GF modulus " + std::to_string(p) + " is not prime");
    return Field(Kind::Prime, p);
}

std::string Field::name() const {
    return is_rational() ? "Q" : "GF(" + std::to_string(p_) + ")";
}

Field Field::parse(const std::string& name) {
    if (name == "Q") return rationals();
    if (name.rfind("GF(", 0) == 0 && name.back() == ')') {
        const std::string digits = name.substr(3, name.size() - 4);
        if (digits.empty()) throw ParseError("bad field name: " + name);
        std::uint64_t p = 0;
        for (char c : digits) {
            if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("bad field name: " + name);
            p = p * 10 + static_cast<std::uint64_t>(c - '0');
        }
        return prime(p);
    }
    throw ParseError("bad field name: " + name);
}

Scalar Scalar::zero(const Field& f) {
    Scalar s(f);
    return s;
}

Scalar Scalar::one(const Field& f) {
    Scalar s(f);
    if (f.is_rational())
        s.rat_ = 1;
    else
        s.res_ = 1 % f.modulus();
    return s;
}

Scalar Scalar::from_int(long long v, const Field& f) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rat_ = v;
    } else {
        const std::uint64_t p = f.modulus();
        std::int64_t r = static_cast<std::int64_t>(v % static_cast<std::int64_t>(p));
        if (r < 0) r += static_cast<std::int64_t>(p);
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::rational(Rational v) {
    Scalar s(Field::rationals());
    s.rat_ = std::move(v);
    return s;
}

Scalar Scalar::fraction(BigInt num, BigInt den) {
    if (den == 0) throw DivisionByZero("zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    return rational(Rational(std::move(num), std::move(den)));
}

Scalar Scalar::residue(std::uint64_t v, const Field& f) {
    if (!f.is_prime()) throw MixedFields("residue scalar requires a prime field");
    Scalar s(f);
    s.res_ = v % f.modulus();
    return s;
}

bool Scalar::is_zero() const { return field_.is_rational() ? rat_.is_zero() : res_ == 0; }

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.modulus();
}

void Scalar::check_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_)
        throw MixedFields("cannot combine " + field_.name() + " with " + rhs.field_.name());
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ + rhs.rat_;
    } else {
        const std::uint64_t p = field_.modulus();
        std::uint64_t r = res_ + rhs.res_; // p < 2^63: no wrap
        if (r >= p) r -= p;
        s.res_ = r;
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ - rhs.rat_;
    } else {
        const std::uint64_t p = field_.modulus();
        s.res_ = res_ >= rhs.res_ ? res_ - rhs.res_ : res_ + p - rhs.res_;
    }
    return s;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
    check_same_field(rhs);
    Scalar s(field_);
    if (field_.is_rational())
        s.rat_ = rat_ * rhs.rat_;
    else
        s.res_ = mulmod(res_, rhs.res_, field_.modulus());
    return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational())
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : field_.modulus() - res_;
    return s;
}

Scalar Scalar::inverse() const {
    if (is_zero()) throw DivisionByZero();
    Scalar s(field_);
    if (field_.is_rational())
        s.rat_ = 1 / rat_;
    else
        s.res_ = invmod(res_, field_.modulus());
    return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    return field_.is_rational() ? rat_ == rhs.rat_ : res_ == rhs.res_;
}

std::string Scalar::str() const {
    if (field_.is_prime()) return std::to_string(res_);
    const BigInt num = boost::multiprecision::numerator(rat_);
    const BigInt den = boost::multiprecision::denominator(rat_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

Scalar Scalar::parse(const std::string& text, const Field& f) {
    if (text.empty()) throw ParseError("empty scalar literal");
    const auto slash = text.find('/');
    try {
        if (f.is_prime()) {
            if (slash != std::string::npos) {
                const Scalar num = parse(text.substr(0, slash), f);
                const Scalar den = parse(text.substr(slash + 1), f);
                return num / den;
            }
            BigInt v(text);
            BigInt p(f.modulus());
            BigInt r = v % p;
            if (r < 0) r += p;
            return residue(r.convert_to<std::uint64_t>(), f);
        }
        if (slash == std::string::npos) return rational(Rational(BigInt(text)));
        return fraction(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad scalar literal: " + text);
    }
}

double Scalar::to_double() const {
    if (field_.is_prime()) return static_cast<double>(res_);
    return rat_.convert_to<double>();
}

} // namespace ta
