#pragma once

// Exact rationals and big integers backed by GMP.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lctkit {

using BigInt = mpz_class;

/// Thrown for malformed user input (JSON, rationals, flags).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A rational number kept in lowest terms with positive denominator.
class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
    explicit Rat(const BigInt& v) : q_(v) {}
    Rat(const BigInt& num, const BigInt& den);

    /// Accepts "p", "-p", "p/q"; surrounding whitespace is not allowed.
    static Rat parse(std::string_view text);

    BigInt num() const { return q_.get_num(); }
    BigInt den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    /// Serialized form: "p/q", or "p" when q = 1.
    std::string str() const;

    BigInt floor() const;
    BigInt ceil() const;

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o);

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    Rat operator-() const { Rat r; r.q_ = -q_; return r; }

    friend bool operator==(const Rat& a, const Rat& b) { return a.q_ == b.q_; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b)
    {
        int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rat& r);

Rat pow(const Rat& base, unsigned exponent);
Rat abs(const Rat& r);
BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt lcm(const BigInt& a, const BigInt& b);

using RatVector = std::vector<Rat>;

std::string to_string(const BigInt& v);

}  // namespace lctkit
