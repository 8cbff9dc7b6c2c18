#include "ordept/bch.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace ordept {

namespace {

// Primitive polynomials over GF(2), coefficient bitmask with x^m as the top
// bit (Lin/Costello tables): index = m.
constexpr uint32_t kPrimitivePoly[11] = {
    0, 0, 0,
    0b1011,         // m=3:  x^3 + x + 1
    0b10011,        // m=4:  x^4 + x + 1
    0b100101,       // m=5:  x^5 + x^2 + 1
    0b1000011,      // m=6:  x^6 + x + 1
    0b10001001,     // m=7:  x^7 + x^3 + 1
    0b100011101,    // m=8:  x^8 + x^4 + x^3 + x^2 + 1
    0b1000010001,   // m=9:  x^9 + x^4 + 1
    0b10000001001,  // m=10: x^10 + x^3 + 1
};

struct GField {
    int m, q;  // q = 2^m - 1
    std::vector<int> exp_, log_;

    explicit GField(int m_) : m(m_), q((1 << m_) - 1), exp_(2 * q), log_(q + 1) {
        uint32_t poly = kPrimitivePoly[m];
        int x = 1;
        for (int i = 0; i < q; ++i) {
            exp_[i] = x;
            exp_[i + q] = x;
            log_[x] = i;
            x <<= 1;
            if (x > q) x ^= int(poly);
        }
    }

    int mul(int a, int b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    int alpha_pow(int e) const { return exp_[((e % q) + q) % q]; }
};

// GF(2) polynomial as coefficient vector, c[i] = coefficient of x^i.
using Poly2 = std::vector<uint8_t>;

Poly2 poly2_mul(const Poly2& a, const Poly2& b) {
    Poly2 r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] ^= b[j];
    }
    return r;
}

// Minimal polynomial of alpha^s: product of (x + alpha^e) over the cyclotomic
// coset of s. All coefficients land in GF(2).
Poly2 minimal_polynomial(const GField& gf, int s) {
    std::vector<int> coset;
    int e = s % gf.q;
    do {
        coset.push_back(e);
        e = (2 * e) % gf.q;
    } while (e != s % gf.q);

    std::vector<int> poly{1};  // coefficients in GF(2^m), low degree first
    for (int exp : coset) {
        int root = gf.alpha_pow(exp);
        std::vector<int> next(poly.size() + 1, 0);
        for (size_t i = 0; i < poly.size(); ++i) {
            next[i + 1] ^= poly[i];
            next[i] ^= gf.mul(poly[i], root);
        }
        poly = std::move(next);
    }
    Poly2 out(poly.size());
    for (size_t i = 0; i < poly.size(); ++i) {
        if (poly[i] > 1)
            throw std::logic_error("bch: minimal polynomial left GF(2)");
        out[i] = uint8_t(poly[i]);
    }
    return out;
}

// x^e mod g, low degree first, result shorter than g.
Poly2 mod_xpow(int e, const Poly2& g) {
    int deg_g = int(g.size()) - 1;
    Poly2 rem(deg_g, 0);
    Poly2 cur(deg_g, 0);
    cur[0] = 1;  // x^0
    for (int step = 0; step < e; ++step) {
        // multiply by x
        uint8_t carry = cur[deg_g - 1];
        for (int i = deg_g - 1; i > 0; --i) cur[i] = cur[i - 1];
        cur[0] = 0;
        if (carry)
            for (int i = 0; i < deg_g; ++i) cur[i] ^= g[i];
    }
    rem = cur;
    return rem;
}

}  // namespace

CodeSpec build_bch_code(int m, int t, bool extend) {
    if (m < 3 || m > 10)
        throw std::invalid_argument("build_bch_code: no primitive polynomial for m");
    if (t < 1) throw std::invalid_argument("build_bch_code: t must be >= 1");

    GField gf(m);
    int n_cyc = gf.q;

    // g(x) = lcm of minimal polynomials of odd powers alpha^1..alpha^(2t-1);
    // cosets deduplicated by their smallest member.
    std::set<int> seen;
    Poly2 g{1};
    for (int s = 1; s <= 2 * t - 1; s += 2) {
        int e = s % n_cyc, rep = e;
        do {
            rep = std::min(rep, e);
            e = (2 * e) % n_cyc;
        } while (e != s % n_cyc);
        if (!seen.insert(rep).second) continue;
        g = poly2_mul(g, minimal_polynomial(gf, s));
    }

    int r0 = int(g.size()) - 1;
    int k = n_cyc - r0;
    if (k <= 0)
        throw std::invalid_argument("build_bch_code: k <= 0 for these (m, t)");

    // Cyclic systematic form, bit j = coefficient of x^j: info bit i occupies
    // position r0+i and its parity part is x^(r0+i) mod g.
    std::vector<Poly2> rem(k);
    Poly2 cur = mod_xpow(r0, g);
    for (int i = 0; i < k; ++i) {
        rem[i] = cur;
        if (i + 1 < k) {
            uint8_t carry = cur[r0 - 1];
            for (int j = r0 - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (carry)
                for (int j = 0; j < r0; ++j) cur[j] ^= g[j];
        }
    }

    int n = extend ? n_cyc + 1 : n_cyc;
    int rows = extend ? r0 + 1 : r0;

    std::vector<BitVec> h(rows, BitVec(n));
    for (int rho = 0; rho < r0; ++rho) {
        h[rho].set(rho, true);
        for (int i = 0; i < k; ++i)
            if (rem[i][rho]) h[rho].set(r0 + i, true);
    }
    if (extend)
        for (int j = 0; j < n; ++j) h[r0].set(j, true);

    std::vector<BitVec> gen(k, BitVec(n));
    for (int i = 0; i < k; ++i) {
        gen[i].set(r0 + i, true);
        for (int rho = 0; rho < r0; ++rho)
            if (rem[i][rho]) gen[i].set(rho, true);
        if (extend && gen[i].popcount() % 2 == 1) gen[i].set(n_cyc, true);
    }

    std::string name = "bch-" + std::to_string(n) + "-" + std::to_string(k);
    return make_code(n, n - rows, std::move(h), std::move(gen), std::move(name));
}

}  // namespace ordept
