#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qalpha/bigint.hpp"
#include "qalpha/errors.hpp"

namespace qalpha {

/// Laurent polynomial in q over the integers.  Stored densely between the
/// lowest and highest nonzero exponent; the zero polynomial stores nothing.
class LaurentPoly {
  public:
    LaurentPoly() = default;
    LaurentPoly(long v) {
        if (v != 0) {
            min_exp_ = 0;
            c_.push_back(BigInt(v));
        }
    }
    explicit LaurentPoly(const BigInt& v) {
        if (v != 0) {
            min_exp_ = 0;
            c_.push_back(v);
        }
    }

    static LaurentPoly term(BigInt coeff, std::int64_t exp) {
        LaurentPoly p;
        if (coeff != 0) {
            p.min_exp_ = exp;
            p.c_.push_back(std::move(coeff));
        }
        return p;
    }
    static LaurentPoly q_power(std::int64_t e) { return term(BigInt(1), e); }

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && min_exp_ == 0 && c_[0] == 1; }
    /// Single nonzero term c*q^e.
    bool is_monomial() const { return c_.size() == 1; }

    std::int64_t min_exp() const { return min_exp_; }
    std::int64_t max_exp() const { return min_exp_ + static_cast<std::int64_t>(c_.size()) - 1; }
    /// Span of exponents; -1 for the zero polynomial.
    std::int64_t spread() const { return static_cast<std::int64_t>(c_.size()) - 1; }

    BigInt coeff(std::int64_t e) const {
        if (is_zero() || e < min_exp_ || e > max_exp()) return 0;
        return c_[static_cast<std::size_t>(e - min_exp_)];
    }
    const BigInt& leading() const { return c_.back(); }
    const BigInt& trailing() const { return c_.front(); }

    std::map<std::int64_t, BigInt> terms() const {
        std::map<std::int64_t, BigInt> m;
        for (std::size_t i = 0; i < c_.size(); ++i)
            if (c_[i] != 0) m[min_exp_ + static_cast<std::int64_t>(i)] = c_[i];
        return m;
    }
    static LaurentPoly from_terms(const std::map<std::int64_t, BigInt>& m) {
        LaurentPoly p;
        for (const auto& [e, v] : m) p += term(v, e);
        return p;
    }

    LaurentPoly shifted(std::int64_t d) const {
        LaurentPoly p = *this;
        if (!p.is_zero()) p.min_exp_ += d;
        return p;
    }

    /// q -> q^{-1}.
    LaurentPoly flip_q() const {
        LaurentPoly p;
        if (is_zero()) return p;
        p.min_exp_ = -max_exp();
        p.c_.assign(c_.rbegin(), c_.rend());
        return p;
    }

    LaurentPoly operator-() const {
        LaurentPoly p = *this;
        for (auto& v : p.c_) v = -v;
        return p;
    }

    LaurentPoly& operator+=(const LaurentPoly& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        std::int64_t lo = std::min(min_exp_, o.min_exp_);
        std::int64_t hi = std::max(max_exp(), o.max_exp());
        std::vector<BigInt> out(static_cast<std::size_t>(hi - lo + 1));
        for (std::size_t i = 0; i < c_.size(); ++i) out[static_cast<std::size_t>(min_exp_ - lo) + i] = std::move(c_[i]);
        for (std::size_t i = 0; i < o.c_.size(); ++i) out[static_cast<std::size_t>(o.min_exp_ - lo) + i] += o.c_[i];
        min_exp_ = lo;
        c_ = std::move(out);
        trim();
        return *this;
    }
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }

    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
        LaurentPoly p;
        if (a.is_zero() || b.is_zero()) return p;
        p.min_exp_ = a.min_exp_ + b.min_exp_;
        p.c_.assign(a.c_.size() + b.c_.size() - 1, BigInt(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) {
                if (b.c_[j] == 0) continue;
                p.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        p.trim();
        return p;
    }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly& mul_int(const BigInt& v) {
        if (v == 0) {
            c_.clear();
            min_exp_ = 0;
            return *this;
        }
        for (auto& x : c_) x *= v;
        return *this;
    }

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return (a.is_zero() && b.is_zero()) || (a.min_exp_ == b.min_exp_ && a.c_ == b.c_);
    }
    friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

    /// gcd of all coefficients, always nonnegative; 0 for the zero polynomial.
    BigInt content() const {
        BigInt g = 0;
        for (const auto& v : c_) {
            if (v != 0) g = big_gcd(g, v);
            if (g == 1) break;
        }
        return g;
    }

    LaurentPoly& div_int_exact(const BigInt& v) {
        for (auto& x : c_) {
            BigInt r = x % v;
            if (r != 0) throw divisibility_error("integer content division is not exact");
            x /= v;
        }
        return *this;
    }

    /// Sum of coefficients, i.e. the value at q = 1.
    BigInt value_at_one() const {
        BigInt s = 0;
        for (const auto& v : c_) s += v;
        return s;
    }

    /// Evaluate at a nonzero rational q-value.
    BigRational eval(const BigRational& x) const {
        if (is_zero()) return 0;
        if (x == 0) throw bad_specialization("Laurent polynomial evaluated at q = 0");
        BigRational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) {
            acc *= x;
            acc += BigRational(c_[i]);
        }
        return acc * rational_pow(x, min_exp_);
    }

    /// Exact division over the integers; returns false if not divisible.
    static bool divide_exact(const LaurentPoly& a, const LaurentPoly& b, LaurentPoly& quot) {
        if (b.is_zero()) throw domain_error("division by zero polynomial");
        if (a.is_zero()) {
            quot = LaurentPoly();
            return true;
        }
        if (a.spread() < b.spread()) return false;
        std::vector<BigInt> rem = a.c_;
        std::size_t bn = b.c_.size();
        std::vector<BigInt> q(rem.size() - bn + 1);
        for (std::size_t k = q.size(); k-- > 0;) {
            BigInt& lead = rem[k + bn - 1];
            if (lead == 0) continue;
            if (lead % b.c_.back() != 0) return false;
            BigInt f = lead / b.c_.back();
            for (std::size_t j = 0; j < bn; ++j) rem[k + j] -= f * b.c_[j];
            q[k] = std::move(f);
        }
        for (const auto& v : rem)
            if (v != 0) return false;
        LaurentPoly out;
        out.min_exp_ = a.min_exp_ - b.min_exp_;
        out.c_ = std::move(q);
        out.trim();
        quot = std::move(out);
        return true;
    }

    /// Exact division by (q - 1); requires value_at_one() == 0.
    LaurentPoly divided_by_q_minus_one() const {
        LaurentPoly quot;
        static const LaurentPoly qm1 = q_power(1) - LaurentPoly(1);
        if (!divide_exact(*this, qm1, quot)) throw divisibility_error("(q - 1) does not divide the polynomial");
        return quot;
    }

    /// gcd in Z[q] (content and primitive part both included), normalized to
    /// lowest exponent 0 and positive leading coefficient.
    static LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
        if (a.is_zero()) return normalize_unit(b);
        if (b.is_zero()) return normalize_unit(a);
        BigInt ca = a.content(), cb = b.content();
        BigInt cg = big_gcd(ca, cb);
        LaurentPoly pa = a, pb = b;
        pa.div_int_exact(ca);
        pb.div_int_exact(cb);
        LaurentPoly g = primitive_gcd(std::move(pa), std::move(pb));
        g.mul_int(cg);
        return g;  // primitive_gcd already normalized
    }

  private:
    std::int64_t min_exp_ = 0;
    std::vector<BigInt> c_;

    void trim() {
        std::size_t lo = 0, hi = c_.size();
        while (hi > lo && c_[hi - 1] == 0) --hi;
        while (lo < hi && c_[lo] == 0) ++lo;
        if (lo == hi) {
            c_.clear();
            min_exp_ = 0;
            return;
        }
        if (lo > 0 || hi < c_.size()) {
            std::vector<BigInt> out(std::make_move_iterator(c_.begin() + static_cast<std::ptrdiff_t>(lo)),
                                    std::make_move_iterator(c_.begin() + static_cast<std::ptrdiff_t>(hi)));
            c_ = std::move(out);
            min_exp_ += static_cast<std::int64_t>(lo);
        }
    }

    static LaurentPoly normalize_unit(LaurentPoly p) {
        if (p.is_zero()) return p;
        p.min_exp_ = 0;
        if (p.leading() < 0)
            for (auto& v : p.c_) v = -v;
        return p;
    }

    // Primitive PRS on the polynomial parts (exponent shifts are units here).
    static LaurentPoly primitive_gcd(LaurentPoly a, LaurentPoly b) {
        a.min_exp_ = 0;
        b.min_exp_ = 0;
        if (a.spread() < b.spread()) std::swap(a, b);
        while (!b.is_zero()) {
            if (b.spread() == 0) return LaurentPoly(1);
            LaurentPoly r = pseudo_rem(a, b);
            a = std::move(b);
            b = std::move(r);
            if (!b.is_zero()) {
                b.min_exp_ = 0;
                b.div_int_exact(b.content());
            }
        }
        return normalize_unit(std::move(a));
    }

    // lc(b)^(deg a - deg b + 1) * a mod b, on polynomial parts.
    static LaurentPoly pseudo_rem(const LaurentPoly& a, const LaurentPoly& b) {
        std::vector<BigInt> r = a.c_;
        const std::vector<BigInt>& d = b.c_;
        std::int64_t k = a.spread() - b.spread();
        const BigInt& lb = d.back();
        for (std::int64_t i = k; i >= 0; --i) {
            BigInt lead = r[static_cast<std::size_t>(i) + d.size() - 1];
            for (auto& v : r) v *= lb;
            if (lead != 0)
                for (std::size_t j = 0; j < d.size(); ++j)
                    r[static_cast<std::size_t>(i) + j] -= lead * d[j];
        }
        LaurentPoly out;
        out.c_ = std::move(r);
        out.trim();
        return out;
    }
};

}  // namespace qalpha
