#include "germlab/rational.hpp"

#include <limits>
#include <ostream>
#include <stdexcept>

namespace germlab {

namespace {

constexpr int64_t kMax = std::numeric_limits<int64_t>::max();

using u128 = unsigned __int128;

u128 uabs(__int128 v) { return v < 0 ? static_cast<u128>(-v) : static_cast<u128>(v); }

u128 gcd128(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    if ((a >> 64) == 0 && (b >> 64) == 0) {
        uint64_t x = static_cast<uint64_t>(a), y = static_cast<uint64_t>(b);
        while (y) {
            uint64_t t = x % y;
            x = y;
            y = t;
        }
        return x;
    }
    while (b) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

uint64_t gcd64(uint64_t a, uint64_t b) {
    while (b) {
        uint64_t t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool fits(__int128 v) { return v <= kMax && v >= -static_cast<__int128>(kMax); }

mpz_class mpz_from_wide(__int128 v) {
    bool neg = v < 0;
    u128 u = uabs(v);
    mpz_class hi(static_cast<unsigned long>(static_cast<uint64_t>(u >> 64)));
    mpz_class lo(static_cast<unsigned long>(static_cast<uint64_t>(u)));
    mpz_class r = (hi << 64) + lo;
    return neg ? mpz_class(-r) : r;
}

bool mpz_small(const mpz_class& z, int64_t& out) {
    if (!mpz_fits_slong_p(z.get_mpz_t())) return false;
    long v = z.get_si();
    if (v == std::numeric_limits<long>::min()) return false;
    out = v;
    return true;
}

}  // namespace

Rational::Rational(long long v) {
    if (v == std::numeric_limits<long long>::min())
        assign_mpq(mpq_class(mpz_from_wide(v)));
    else
        num_ = v;
}

Rational::Rational(long long n, long long d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    assign_wide(n, d);
}

Rational& Rational::operator=(const Rational& o) {
    if (this == &o) return *this;
    num_ = o.num_;
    den_ = o.den_;
    if (o.big_) {
        if (big_)
            *big_ = *o.big_;
        else
            big_ = new mpq_class(*o.big_);
    } else if (big_) {
        delete big_;
        big_ = nullptr;
    }
    return *this;
}

Rational& Rational::operator=(Rational&& o) noexcept {
    if (this == &o) return *this;
    delete big_;
    num_ = o.num_;
    den_ = o.den_;
    big_ = o.big_;
    o.big_ = nullptr;
    return *this;
}

void Rational::assign_mpq(mpq_class&& q) {
    q.canonicalize();
    int64_t n, d;
    if (mpz_small(q.get_num(), n) && mpz_small(q.get_den(), d)) {
        delete big_;
        big_ = nullptr;
        num_ = n;
        den_ = d;
        return;
    }
    if (big_)
        *big_ = std::move(q);
    else
        big_ = new mpq_class(std::move(q));
    num_ = 0;
    den_ = 1;
}

void Rational::assign_wide(__int128 n, __int128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    if (n == 0) {
        delete big_;
        big_ = nullptr;
        num_ = 0;
        den_ = 1;
        return;
    }
    if (d != 1) {
        u128 g = gcd128(uabs(n), static_cast<u128>(d));
        if (g != 1) {
            n /= static_cast<__int128>(g);
            d /= static_cast<__int128>(g);
        }
    }
    if (fits(n) && fits(d)) {
        delete big_;
        big_ = nullptr;
        num_ = static_cast<int64_t>(n);
        den_ = static_cast<int64_t>(d);
        return;
    }
    mpq_class q(mpz_from_wide(n), mpz_from_wide(d));
    assign_mpq(std::move(q));
}

bool Rational::is_integer() const {
    if (!big_) return den_ == 1;
    return big_->get_den() == 1;
}

int Rational::sign() const {
    if (!big_) return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
    return sgn(*big_);
}

mpq_class Rational::to_mpq() const {
    if (big_) return *big_;
    mpq_class q(mpz_from_wide(num_), mpz_from_wide(den_));
    return q;
}

mpz_class Rational::numerator() const { return big_ ? mpz_class(big_->get_num()) : mpz_from_wide(num_); }
mpz_class Rational::denominator() const { return big_ ? mpz_class(big_->get_den()) : mpz_from_wide(den_); }

long long Rational::to_int() const {
    if (big_ || den_ != 1) throw std::range_error("rational is not a small integer");
    return num_;
}

std::string Rational::str() const {
    if (big_) return big_->get_str();
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(const std::string& text) {
    mpq_class q;
    std::string t = text;
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    if (t.empty() || q.set_str(t, 10) != 0) throw std::invalid_argument("bad rational: " + text);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + text);
    return Rational(q);
}

Rational Rational::operator-() const {
    Rational r;
    if (big_)
        r.assign_mpq(-*big_);
    else {
        r.num_ = -num_;
        r.den_ = den_;
    }
    return r;
}

Rational Rational::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    Rational r;
    if (big_) {
        mpq_class q = 1 / *big_;
        r.assign_mpq(std::move(q));
    } else if (num_ < 0) {
        r.num_ = -den_;
        r.den_ = -num_;
    } else {
        r.num_ = den_;
        r.den_ = num_;
    }
    return r;
}

Rational& Rational::operator+=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int64_t s;
            if (!__builtin_add_overflow(num_, o.num_, &s) && s != std::numeric_limits<int64_t>::min()) {
                num_ = s;
                return *this;
            }
            assign_wide(static_cast<__int128>(num_) + o.num_, 1);
            return *this;
        }
        if (den_ == o.den_) {
            assign_wide(static_cast<__int128>(num_) + o.num_, den_);
            return *this;
        }
        __int128 n = static_cast<__int128>(num_) * o.den_ + static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        assign_wide(n, d);
        return *this;
    }
    assign_mpq(to_mpq() + o.to_mpq());
    return *this;
}

Rational& Rational::operator-=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (den_ == 1 && o.den_ == 1) {
            int64_t s;
            if (!__builtin_sub_overflow(num_, o.num_, &s) && s != std::numeric_limits<int64_t>::min()) {
                num_ = s;
                return *this;
            }
            assign_wide(static_cast<__int128>(num_) - o.num_, 1);
            return *this;
        }
        if (den_ == o.den_) {
            assign_wide(static_cast<__int128>(num_) - o.num_, den_);
            return *this;
        }
        __int128 n = static_cast<__int128>(num_) * o.den_ - static_cast<__int128>(o.num_) * den_;
        __int128 d = static_cast<__int128>(den_) * o.den_;
        assign_wide(n, d);
        return *this;
    }
    assign_mpq(to_mpq() - o.to_mpq());
    return *this;
}

Rational& Rational::operator*=(const Rational& o) {
    if (!big_ && !o.big_) {
        if (num_ == 0) return *this;
        if (o.num_ == 0) {
            num_ = 0;
            den_ = 1;
            return *this;
        }
        if (den_ == 1 && o.den_ == 1) {
            int64_t s;
            if (!__builtin_mul_overflow(num_, o.num_, &s) && s != std::numeric_limits<int64_t>::min()) {
                num_ = s;
                return *this;
            }
            assign_wide(static_cast<__int128>(num_) * o.num_, 1);
            return *this;
        }
        uint64_t g1 = gcd64(static_cast<uint64_t>(num_ < 0 ? -num_ : num_), static_cast<uint64_t>(o.den_));
        uint64_t g2 = gcd64(static_cast<uint64_t>(o.num_ < 0 ? -o.num_ : o.num_), static_cast<uint64_t>(den_));
        __int128 n = static_cast<__int128>(num_ / static_cast<int64_t>(g1)) * (o.num_ / static_cast<int64_t>(g2));
        __int128 d = static_cast<__int128>(den_ / static_cast<int64_t>(g2)) * (o.den_ / static_cast<int64_t>(g1));
        if (fits(n) && fits(d)) {
            num_ = static_cast<int64_t>(n);
            den_ = static_cast<int64_t>(d);
            return *this;
        }
        assign_wide(n, d);
        return *this;
    }
    assign_mpq(to_mpq() * o.to_mpq());
    return *this;
}

Rational& Rational::operator/=(const Rational& o) { return *this *= o.inverse(); }

void Rational::submul(const Rational& a, const Rational& b) {
    if (!big_ && !a.big_ && !b.big_ && den_ == 1 && a.den_ == 1 && b.den_ == 1) {
        int64_t p, s;
        if (!__builtin_mul_overflow(a.num_, b.num_, &p) && !__builtin_sub_overflow(num_, p, &s) &&
            s != std::numeric_limits<int64_t>::min()) {
            num_ = s;
            return;
        }
    }
    Rational t = a;
    t *= b;
    *this -= t;
}

bool operator==(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
    if (a.big_ && b.big_) return *a.big_ == *b.big_;
    return false;
}

bool operator<(const Rational& a, const Rational& b) {
    if (!a.big_ && !b.big_) {
        if (a.den_ == b.den_) return a.num_ < b.num_;
        return static_cast<__int128>(a.num_) * b.den_ < static_cast<__int128>(b.num_) * a.den_;
    }
    return a.to_mpq() < b.to_mpq();
}

std::ostream& operator<<(std::ostream& os, const Rational& q) { return os << q.str(); }

}  // namespace germlab
