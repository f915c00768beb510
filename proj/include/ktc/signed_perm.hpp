#pragma once

#include <cstdint>
#include <cstdlib>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace ktc {

// Inline storage for signed permutations; complexes here stay in dimension
// at most KTC_MAX_DIM, and keeping this type flat matters: the quotient
// engine holds one per cell on million-cell complexes.
constexpr int KTC_MAX_DIM = 7;

struct PermStore {
    int8_t v[KTC_MAX_DIM] = {0};
    uint8_t n = 0;

    size_t size() const { return n; }
    void resize(size_t k) {
        if (k > KTC_MAX_DIM) throw std::length_error("cube dimension above KTC_MAX_DIM");
        n = static_cast<uint8_t>(k);
    }
    void push_back(int8_t x) {
        if (n >= KTC_MAX_DIM) throw std::length_error("cube dimension above KTC_MAX_DIM");
        v[n++] = x;
    }
    void reserve(size_t) {}
    int8_t& operator[](size_t i) { return v[i]; }
    const int8_t& operator[](size_t i) const { return v[i]; }
    const int8_t* data() const { return v; }
    friend bool operator==(const PermStore& a, const PermStore& b) {
        if (a.n != b.n) return false;
        for (uint8_t i = 0; i < a.n; ++i)
            if (a.v[i] != b.v[i]) return false;
        return true;
    }
};

// Signed coordinate permutation of the standard cube [0,1]^k, i.e. an
// isometry fixing the cube setwise.  Entry s[i] = ±(j+1) means output
// coordinate i reads input coordinate j, negated meaning x -> 1-x.
struct SignedPerm {
    PermStore s;

    SignedPerm() = default;
    SignedPerm(std::initializer_list<int8_t> v) {
        for (int8_t x : v) s.push_back(x);
    }
    explicit SignedPerm(const std::vector<int8_t>& v) {
        for (int8_t x : v) s.push_back(x);
    }

    static SignedPerm identity(int k) {
        SignedPerm p;
        p.s.resize(k);
        for (int i = 0; i < k; ++i) p.s[i] = static_cast<int8_t>(i + 1);
        return p;
    }

    int dim() const { return static_cast<int>(s.size()); }

    bool is_identity() const {
        for (int i = 0; i < dim(); ++i)
            if (s[i] != i + 1) return false;
        return true;
    }

    int src(int i) const { return std::abs(s[i]) - 1; }
    bool flip(int i) const { return s[i] < 0; }

    // (a o b)(x) = a(b(x))
    static SignedPerm compose(const SignedPerm& a, const SignedPerm& b) {
        if (a.dim() != b.dim()) throw std::invalid_argument("SignedPerm dim mismatch");
        SignedPerm r;
        r.s.resize(a.dim());
        for (int i = 0; i < a.dim(); ++i) {
            int j = a.src(i);
            int v = b.src(j) + 1;
            if (a.flip(i) != b.flip(j)) v = -v;
            r.s[i] = static_cast<int8_t>(v);
        }
        return r;
    }

    SignedPerm inverse() const {
        SignedPerm r;
        r.s.resize(dim());
        for (int i = 0; i < dim(); ++i) {
            int j = src(i);
            r.s[j] = static_cast<int8_t>(flip(i) ? -(i + 1) : (i + 1));
        }
        return r;
    }

    // block sum: acts as a on the first block and as b on the rest
    static SignedPerm block(const SignedPerm& a, const SignedPerm& b) {
        SignedPerm r;
        for (int i = 0; i < a.dim(); ++i) r.s.push_back(a.s[i]);
        for (int i = 0; i < b.dim(); ++i) {
            int v = b.src(i) + 1 + a.dim();
            r.s.push_back(static_cast<int8_t>(b.flip(i) ? -v : v));
        }
        return r;
    }

    // apply to a 0/1 corner vector (output[i] = corner[src(i)] xor flip(i))
    std::vector<uint8_t> apply_corner(const std::vector<uint8_t>& x) const {
        std::vector<uint8_t> y(dim());
        for (int i = 0; i < dim(); ++i) y[i] = static_cast<uint8_t>(x[src(i)] ^ (flip(i) ? 1 : 0));
        return y;
    }

    // determinant of the linear part: permutation sign times (-1)^#flips
    int det() const {
        int n = dim();
        uint8_t seen[KTC_MAX_DIM] = {0};
        int sign = 1;
        for (int i = 0; i < n; ++i) {
            if (seen[i]) continue;
            int len = 0, j = i;
            while (!seen[j]) {
                seen[j] = 1;
                if (flip(j)) sign = -sign;
                j = src(j);
                ++len;
            }
            if (len % 2 == 0) sign = -sign;
        }
        return sign;
    }

    friend bool operator==(const SignedPerm& a, const SignedPerm& b) { return a.s == b.s; }

    std::string to_string() const {
        std::string out = "[";
        for (int i = 0; i < dim(); ++i) {
            if (i) out += ",";
            out += std::to_string(static_cast<int>(s[i]));
        }
        return out + "]";
    }
};

// Codimension-1 face embedding phi_{d,eps}: [0,1]^{k-1} -> [0,1]^k fixing
// coordinate d (1-based) to eps and shifting later coordinates up.
//
// push_through_face solves  g o phi_{d,eps} = phi_{d',eps'} o g'  for a
// signed permutation g of [0,1]^k; returns (d', eps', g').
struct FacePush {
    int dir;   // d', 1-based
    int sign;  // eps' in {0,1}
    SignedPerm induced;
};

inline FacePush push_through_face(const SignedPerm& g, int dir, int sign) {
    int k = g.dim();
    if (dir < 1 || dir > k) throw std::invalid_argument("face direction out of range");
    int dprime = -1;
    for (int i = 0; i < k; ++i)
        if (g.src(i) == dir - 1) { dprime = i; break; }
    FacePush out;
    out.dir = dprime + 1;
    out.sign = g.flip(dprime) ? (1 - sign) : sign;
    out.induced.s.resize(k - 1);
    int oi = 0;
    for (int i = 0; i < k; ++i) {
        if (i == dprime) continue;
        int j = g.src(i);
        int jj = j < dir - 1 ? j : j - 1;
        int v = jj + 1;
        if (g.flip(i)) v = -v;
        out.induced.s[oi++] = static_cast<int8_t>(v);
    }
    return out;
}

} // namespace ktc
