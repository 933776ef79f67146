#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>

namespace germlab {

// Exact rational. Values whose reduced numerator and denominator fit in
// int64 live inline; anything larger is promoted to an mpq_class and demoted
// again as soon as it fits. The representation is canonical, so equality is
// a field comparison.
class Rational {
public:
    Rational() = default;
    Rational(int v) : num_(v) {}
    Rational(long v) : Rational(static_cast<long long>(v)) {}
    Rational(long long v);
    Rational(long long n, long long d);
    explicit Rational(const mpq_class& q) { assign_mpq(mpq_class(q)); }

    Rational(const Rational& o) : num_(o.num_), den_(o.den_) {
        if (o.big_) big_ = new mpq_class(*o.big_);
    }
    Rational(Rational&& o) noexcept : num_(o.num_), den_(o.den_), big_(o.big_) {
        o.big_ = nullptr;
    }
    Rational& operator=(const Rational& o);
    Rational& operator=(Rational&& o) noexcept;
    ~Rational() { delete big_; }

    bool is_zero() const { return !big_ && num_ == 0; }
    bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
    bool is_integer() const;
    bool is_small() const { return !big_; }
    int sign() const;

    mpq_class to_mpq() const;
    mpz_class numerator() const;
    mpz_class denominator() const;
    // Only meaningful when the value is a small integer.
    long long to_int() const;
    bool fits_int() const { return !big_ && den_ == 1; }

    std::string str() const;
    // Accepts "a" or "a/b" with an optional sign; throws std::invalid_argument.
    static Rational parse(const std::string& text);

    Rational operator-() const;
    Rational inverse() const;

    Rational& operator+=(const Rational& o);
    Rational& operator-=(const Rational& o);
    Rational& operator*=(const Rational& o);
    Rational& operator/=(const Rational& o);

    // this -= a * b
    void submul(const Rational& a, const Rational& b);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b);
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

private:
    int64_t num_ = 0;
    int64_t den_ = 1;
    mpq_class* big_ = nullptr;

    void assign_mpq(mpq_class&& q);
    void assign_wide(__int128 n, __int128 d);
};

std::ostream& operator<<(std::ostream& os, const Rational& q);

}  // namespace germlab
