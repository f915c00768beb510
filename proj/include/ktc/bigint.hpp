#pragma once

#include <cstdint>
#include <cstdlib>
#include <cstring>
#include <string>
#include <vector>
#include <stdexcept>
#include <algorithm>
#include <compare>

namespace ktc {

// Arbitrary-precision signed integer with an inline int64 fast path.
// Values that fit in int64 never touch the heap; exact division and
// magnitude comparison are provided for the Smith normal form pipeline,
// where intermediate coefficient growth must not overflow silently.
class BigInt {
public:
    BigInt() = default;
    BigInt(int v) : v_(v) {}
    BigInt(long v) : v_(v) {}
    BigInt(long long v) : v_(v) {}
    BigInt(unsigned long long v) {
        if (v <= static_cast<unsigned long long>(INT64_MAX)) {
            v_ = static_cast<int64_t>(v);
        } else {
            uint32_t w[2] = {static_cast<uint32_t>(v), static_cast<uint32_t>(v >> 32)};
            set_heap(w, 2, false);
        }
    }

    BigInt(const BigInt& o) : v_(o.v_) {
        if (o.h_) h_ = clone(o.h_);
    }
    BigInt(BigInt&& o) noexcept : v_(o.v_), h_(o.h_) { o.h_ = nullptr; o.v_ = 0; }
    BigInt& operator=(const BigInt& o) {
        if (this == &o) return *this;
        release();
        v_ = o.v_;
        h_ = o.h_ ? clone(o.h_) : nullptr;
        return *this;
    }
    BigInt& operator=(BigInt&& o) noexcept {
        if (this == &o) return *this;
        release();
        v_ = o.v_; h_ = o.h_;
        o.h_ = nullptr; o.v_ = 0;
        return *this;
    }
    ~BigInt() { release(); }

    bool is_zero() const { return !h_ && v_ == 0; }
    bool is_one() const { return !h_ && v_ == 1; }
    bool is_pm_one() const { return !h_ && (v_ == 1 || v_ == -1); }
    // -1, 0, +1
    int sign() const {
        if (h_) return heap_neg() ? -1 : 1;
        return v_ < 0 ? -1 : (v_ > 0 ? 1 : 0);
    }
    bool fits_int64() const { return h_ == nullptr; }
    int64_t as_int64() const {
        if (h_) throw std::overflow_error("BigInt does not fit int64");
        return v_;
    }

    friend BigInt operator-(const BigInt& a) {
        BigInt r = a;
        r.negate();
        return r;
    }
    void negate() {
        if (h_) set_heap_sign(!heap_neg());
        else if (v_ == INT64_MIN) promote(), set_heap_sign(false);
        else v_ = -v_;
        normalize();
    }

    friend BigInt operator+(const BigInt& a, const BigInt& b) { return add_sub(a, b, false); }
    friend BigInt operator-(const BigInt& a, const BigInt& b) { return add_sub(a, b, true); }
    friend BigInt operator*(const BigInt& a, const BigInt& b) {
        if (!a.h_ && !b.h_) {
            __int128 p = static_cast<__int128>(a.v_) * b.v_;
            if (p >= INT64_MIN && p <= INT64_MAX) return BigInt(static_cast<int64_t>(p));
        }
        Mag ma = a.mag(), mb = b.mag();
        Mag mp = mag_mul(ma, mb);
        return from_mag(mp, (a.sign() < 0) != (b.sign() < 0));
    }
    BigInt& operator+=(const BigInt& b) { *this = *this + b; return *this; }
    BigInt& operator-=(const BigInt& b) { *this = *this - b; return *this; }
    BigInt& operator*=(const BigInt& b) { *this = *this * b; return *this; }

    // Truncated division (C semantics): q = trunc(a/b), r = a - q*b.
    static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
        if (b.is_zero()) throw std::domain_error("BigInt division by zero");
        if (!a.h_ && !b.h_) {
            if (!(a.v_ == INT64_MIN && b.v_ == -1)) {
                q = BigInt(a.v_ / b.v_);
                r = BigInt(a.v_ % b.v_);
                return;
            }
        }
        Mag ma = a.mag(), mb = b.mag();
        Mag mq, mr;
        mag_divmod(ma, mb, mq, mr);
        bool qneg = (a.sign() < 0) != (b.sign() < 0);
        q = from_mag(mq, qneg);
        r = from_mag(mr, a.sign() < 0);
    }
    friend BigInt operator/(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return q;
    }
    friend BigInt operator%(const BigInt& a, const BigInt& b) {
        BigInt q, r;
        divmod(a, b, q, r);
        return r;
    }

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a, b) == 0; }
    friend bool operator!=(const BigInt& a, const BigInt& b) { return cmp(a, b) != 0; }
    friend bool operator<(const BigInt& a, const BigInt& b) { return cmp(a, b) < 0; }
    friend bool operator<=(const BigInt& a, const BigInt& b) { return cmp(a, b) <= 0; }
    friend bool operator>(const BigInt& a, const BigInt& b) { return cmp(a, b) > 0; }
    friend bool operator>=(const BigInt& a, const BigInt& b) { return cmp(a, b) >= 0; }

    static int cmp(const BigInt& a, const BigInt& b) {
        int sa = a.sign(), sb = b.sign();
        if (sa != sb) return sa < sb ? -1 : 1;
        if (sa == 0) return 0;
        int c = mag_cmp(a.mag(), b.mag());
        return sa > 0 ? c : -c;
    }
    // compare |a| with |b|
    static int cmp_abs(const BigInt& a, const BigInt& b) { return mag_cmp(a.mag(), b.mag()); }

    BigInt abs() const {
        BigInt r = *this;
        if (r.sign() < 0) r.negate();
        return r;
    }

    static BigInt gcd(BigInt a, BigInt b) {
        a = a.abs(); b = b.abs();
        while (!b.is_zero()) {
            BigInt q, r;
            divmod(a, b, q, r);
            a = std::move(b);
            b = std::move(r);
        }
        return a;
    }

    std::string to_string() const {
        if (!h_) return std::to_string(v_);
        Mag m = mag();
        std::string out;
        while (!m.empty()) {
            uint64_t rem = 0;
            for (size_t i = m.size(); i-- > 0;) {
                uint64_t cur = (rem << 32) | m[i];
                m[i] = static_cast<uint32_t>(cur / 1000000000u);
                rem = cur % 1000000000u;
            }
            while (!m.empty() && m.back() == 0) m.pop_back();
            char buf[16];
            if (m.empty()) std::snprintf(buf, sizeof buf, "%llu", (unsigned long long)rem);
            else std::snprintf(buf, sizeof buf, "%09llu", (unsigned long long)rem);
            out.insert(0, buf);
        }
        if (out.empty()) out = "0";
        if (heap_neg()) out.insert(0, "-");
        return out;
    }

    size_t hash() const {
        if (!h_) return std::hash<int64_t>()(v_);
        size_t h = heap_neg() ? 0x9e3779b97f4a7c15ull : 0;
        for (uint32_t i = 0; i < h_[0]; ++i) h = h * 1000003u + h_[2 + i];
        return h;
    }

private:
    using Mag = std::vector<uint32_t>;  // little-endian magnitude, no trailing zeros

    int64_t v_ = 0;
    // heap layout: [0] word count n, [1] sign (1 = negative), [2..2+n) words
    uint32_t* h_ = nullptr;

    bool heap_neg() const { return h_[1] != 0; }
    void set_heap_sign(bool neg) { h_[1] = neg ? 1 : 0; }
    void release() {
        if (h_) { std::free(h_); h_ = nullptr; }
    }
    static uint32_t* clone(const uint32_t* src) {
        size_t n = src[0];
        uint32_t* p = static_cast<uint32_t*>(std::malloc((2 + n) * sizeof(uint32_t)));
        std::memcpy(p, src, (2 + n) * sizeof(uint32_t));
        return p;
    }
    void set_heap(const uint32_t* words, size_t n, bool neg) {
        release();
        while (n > 0 && words[n - 1] == 0) --n;
        h_ = static_cast<uint32_t*>(std::malloc((2 + n) * sizeof(uint32_t)));
        h_[0] = static_cast<uint32_t>(n);
        h_[1] = neg ? 1 : 0;
        std::memcpy(h_ + 2, words, n * sizeof(uint32_t));
        v_ = 0;
        normalize();
    }
    void promote() {
        uint64_t m = v_ < 0 ? (v_ == INT64_MIN ? (uint64_t(1) << 63) : uint64_t(-v_)) : uint64_t(v_);
        uint32_t w[2] = {static_cast<uint32_t>(m), static_cast<uint32_t>(m >> 32)};
        bool neg = v_ < 0;
        set_heap(w, 2, neg);
    }
    // shrink to the int64 fast path when possible
    void normalize() {
        if (!h_) return;
        size_t n = h_[0];
        while (n > 0 && h_[2 + n - 1] == 0) --n;
        h_[0] = static_cast<uint32_t>(n);
        if (n == 0) { release(); v_ = 0; return; }
        if (n <= 2) {
            uint64_t m = h_[2];
            if (n == 2) m |= (uint64_t(h_[3]) << 32);
            if (!heap_neg() && m <= static_cast<uint64_t>(INT64_MAX)) { release(); v_ = static_cast<int64_t>(m); return; }
            if (heap_neg() && m <= (uint64_t(1) << 63)) {
                release();
                v_ = (m == (uint64_t(1) << 63)) ? INT64_MIN : -static_cast<int64_t>(m);
                return;
            }
        }
    }

    Mag mag() const {
        if (h_) return Mag(h_ + 2, h_ + 2 + h_[0]);
        uint64_t m = v_ < 0 ? (v_ == INT64_MIN ? (uint64_t(1) << 63) : uint64_t(-v_)) : uint64_t(v_);
        Mag out;
        if (m) out.push_back(static_cast<uint32_t>(m));
        if (m >> 32) out.push_back(static_cast<uint32_t>(m >> 32));
        return out;
    }
    static BigInt from_mag(const Mag& m, bool neg) {
        BigInt r;
        if (m.empty()) return r;
        r.set_heap(m.data(), m.size(), neg);
        return r;
    }

    static int mag_cmp(const Mag& a, const Mag& b) {
        if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
        for (size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
        return 0;
    }
    static Mag mag_add(const Mag& a, const Mag& b) {
        Mag r(std::max(a.size(), b.size()) + 1, 0);
        uint64_t carry = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            uint64_t s = carry;
            if (i < a.size()) s += a[i];
            if (i < b.size()) s += b[i];
            r[i] = static_cast<uint32_t>(s);
            carry = s >> 32;
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    // requires |a| >= |b|
    static Mag mag_sub(const Mag& a, const Mag& b) {
        Mag r = a;
        int64_t borrow = 0;
        for (size_t i = 0; i < r.size(); ++i) {
            int64_t s = static_cast<int64_t>(r[i]) - borrow - (i < b.size() ? b[i] : 0);
            if (s < 0) { s += (int64_t(1) << 32); borrow = 1; } else borrow = 0;
            r[i] = static_cast<uint32_t>(s);
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static Mag mag_mul(const Mag& a, const Mag& b) {
        if (a.empty() || b.empty()) return {};
        Mag r(a.size() + b.size(), 0);
        for (size_t i = 0; i < a.size(); ++i) {
            uint64_t carry = 0;
            for (size_t j = 0; j < b.size(); ++j) {
                uint64_t cur = r[i + j] + static_cast<uint64_t>(a[i]) * b[j] + carry;
                r[i + j] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
            }
            size_t k = i + b.size();
            while (carry) {
                uint64_t cur = r[k] + carry;
                r[k] = static_cast<uint32_t>(cur);
                carry = cur >> 32;
                ++k;
            }
        }
        while (!r.empty() && r.back() == 0) r.pop_back();
        return r;
    }
    static void mag_shl_word(Mag& a) { a.insert(a.begin(), 0); }
    // long division, divisor is a single word
    static void mag_divmod_word(const Mag& a, uint32_t d, Mag& q, uint32_t& r) {
        q.assign(a.size(), 0);
        uint64_t rem = 0;
        for (size_t i = a.size(); i-- > 0;) {
            uint64_t cur = (rem << 32) | a[i];
            q[i] = static_cast<uint32_t>(cur / d);
            rem = cur % d;
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
        r = static_cast<uint32_t>(rem);
    }
    static void mag_divmod(const Mag& a, const Mag& b, Mag& q, Mag& r) {
        if (b.empty()) throw std::domain_error("division by zero magnitude");
        if (mag_cmp(a, b) < 0) { q.clear(); r = a; return; }
        if (b.size() == 1) {
            uint32_t rw;
            mag_divmod_word(a, b[0], q, rw);
            r.clear();
            if (rw) r.push_back(rw);
            return;
        }
        // bitwise long division; multi-word divisors are rare in this codebase
        size_t abits = a.size() * 32;
        q.assign(a.size(), 0);
        r.clear();
        for (size_t i = abits; i-- > 0;) {
            // r = r*2 + bit i of a
            uint32_t carry = (a[i / 32] >> (i % 32)) & 1;
            for (size_t w = 0; w < r.size(); ++w) {
                uint32_t nc = r[w] >> 31;
                r[w] = (r[w] << 1) | carry;
                carry = nc;
            }
            if (carry) r.push_back(carry);
            if (mag_cmp(r, b) >= 0) {
                r = mag_sub(r, b);
                q[i / 32] |= (uint32_t(1) << (i % 32));
            }
        }
        while (!q.empty() && q.back() == 0) q.pop_back();
    }

    static BigInt add_sub(const BigInt& a, const BigInt& b, bool sub) {
        if (!a.h_ && !b.h_) {
            __int128 s = static_cast<__int128>(a.v_) + (sub ? -static_cast<__int128>(b.v_) : static_cast<__int128>(b.v_));
            if (s >= INT64_MIN && s <= INT64_MAX) return BigInt(static_cast<int64_t>(s));
        }
        bool bneg = sub ? (b.sign() > 0) : (b.sign() < 0);
        if (b.is_zero()) bneg = false;
        bool aneg = a.sign() < 0;
        Mag ma = a.mag(), mb = b.mag();
        if (aneg == bneg) return from_mag(mag_add(ma, mb), aneg);
        int c = mag_cmp(ma, mb);
        if (c == 0) return BigInt();
        if (c > 0) return from_mag(mag_sub(ma, mb), aneg);
        return from_mag(mag_sub(mb, ma), bneg);
    }
};

} // namespace ktc
