#pragma once

#include <cstdint>
#include <utility>

#include "qalpha/errors.hpp"
#include "qalpha/laurent.hpp"

namespace qalpha {

/// Element of Q(q), the field of rational functions in q, kept in canonical
/// form: the denominator has lowest q-exponent 0 and positive leading
/// coefficient, and shares no factor with the numerator in Z[q].  Equality is
/// therefore coefficient-wise.
class QRational {
  public:
    QRational() : den_(1) {}
    QRational(long v) : num_(v), den_(1) {}
    QRational(LaurentPoly num) : num_(std::move(num)), den_(1) {}
    QRational(LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) { canonicalize(); }

    static QRational q_power(std::int64_t e) { return QRational(LaurentPoly::q_power(e)); }
    static QRational q() { return q_power(1); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    QRational operator-() const {
        QRational r = *this;
        r.num_ = -r.num_;
        return r;
    }

    friend QRational operator+(const QRational& a, const QRational& b) {
        if (a.den_ == b.den_) return QRational(a.num_ + b.num_, a.den_);
        return QRational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend QRational operator-(const QRational& a, const QRational& b) { return a + (-b); }
    friend QRational operator*(const QRational& a, const QRational& b) {
        if (a.is_zero() || b.is_zero()) return QRational();
        return QRational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend QRational operator/(const QRational& a, const QRational& b) { return a * b.inverse(); }

    QRational& operator+=(const QRational& o) { return *this = *this + o; }
    QRational& operator-=(const QRational& o) { return *this = *this - o; }
    QRational& operator*=(const QRational& o) { return *this = *this * o; }
    QRational& operator/=(const QRational& o) { return *this = *this / o; }

    QRational inverse() const {
        if (is_zero()) throw domain_error("inverse of zero in Q(q)");
        return QRational(den_, num_);
    }

    friend bool operator==(const QRational& a, const QRational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
    friend bool operator!=(const QRational& a, const QRational& b) { return !(a == b); }

    /// q -> q^{-1}.
    QRational flip_q() const { return QRational(num_.flip_q(), den_.flip_q()); }

    /// Evaluate at a nonzero rational q-value.
    BigRational eval(const BigRational& q_value) const {
        BigRational d = den_.eval(q_value);
        if (d == 0) throw bad_specialization("denominator vanishes at the chosen q value");
        return num_.eval(q_value) / d;
    }

    /// Exact limit q -> 1, cancelling (q - 1) factors first.
    BigRational eval_at_one() const {
        LaurentPoly n = num_.shifted(-num_.min_exp());
        LaurentPoly d = den_;
        while (d.value_at_one() == 0) {
            if (n.value_at_one() != 0) throw limit_error("pole at q = 1");
            n = n.divided_by_q_minus_one();
            d = d.divided_by_q_minus_one();
        }
        return BigRational(n.value_at_one()) / BigRational(d.value_at_one());
    }

  private:
    LaurentPoly num_, den_;

    void canonicalize() {
        if (den_.is_zero()) throw domain_error("zero denominator in Q(q)");
        if (num_.is_zero()) {
            den_ = LaurentPoly(1);
            return;
        }
        std::int64_t shift = num_.min_exp() - den_.min_exp();
        num_ = num_.shifted(-num_.min_exp());
        den_ = den_.shifted(-den_.min_exp());
        if (den_.is_monomial()) {
            BigInt g = big_gcd(num_.content(), den_.content());
            num_.div_int_exact(g);
            den_.div_int_exact(g);
        } else {
            LaurentPoly quot;
            if (LaurentPoly::divide_exact(num_, den_, quot)) {
                num_ = std::move(quot);
                den_ = LaurentPoly(1);
            } else {
                LaurentPoly g = LaurentPoly::gcd(num_, den_);
                if (!g.is_one()) {
                    LaurentPoly t;
                    LaurentPoly::divide_exact(num_, g, t);
                    num_ = std::move(t);
                    LaurentPoly::divide_exact(den_, g, t);
                    den_ = std::move(t);
                }
            }
        }
        if (den_.leading() < 0) {
            num_ = -num_;
            den_ = -den_;
        }
        num_ = num_.shifted(shift - num_.min_exp() + num_.min_exp());  // keep as-is; shift applied below
        num_ = num_.shifted(shift);
        den_ = den_.shifted(-den_.min_exp());
    }
};

}  // namespace qalpha
