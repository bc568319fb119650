#include "septic/fp.hpp"

#include <algorithm>
#include <random>
#include <sstream>

namespace septic {

namespace {

long inv_mod(long a, long p) {
    long t = 0, newt = 1, r = p, newr = a % p;
    if (newr < 0) newr += p;
    while (newr != 0) {
        long q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1) throw Error("inv_mod: not invertible");
    return t < 0 ? t + p : t;
}

long mulmod(long a, long b, long p) {
    return static_cast<long>((static_cast<__int128>(a) * b) % p);
}

} // namespace

PolyModP::PolyModP(long p, std::vector<long> coeffs) : p_(p), c_(std::move(coeffs)) {
    for (auto& v : c_) {
        v %= p_;
        if (v < 0) v += p_;
    }
    trim();
}

PolyModP PolyModP::from_int_poly(const PolyZ& f, long p) {
    std::vector<long> c;
    c.reserve(static_cast<size_t>(f.degree() + 1));
    for (int i = 0; i <= f.degree(); ++i) c.push_back(mod_long(f.coeff(i), p));
    return PolyModP(p, std::move(c));
}

void PolyModP::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyModP PolyModP::monic() const {
    if (is_zero() || is_monic()) return *this;
    return *this * inv_mod(leading(), p_);
}

PolyModP operator+(const PolyModP& a, const PolyModP& b) {
    PolyModP out(a.p_);
    out.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.c_.size(); ++i) {
        long v = (i < a.c_.size() ? a.c_[i] : 0) + (i < b.c_.size() ? b.c_[i] : 0);
        out.c_[i] = v % a.p_;
    }
    out.trim();
    return out;
}

PolyModP operator-(const PolyModP& a, const PolyModP& b) {
    PolyModP out(a.p_);
    out.c_.assign(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < out.c_.size(); ++i) {
        long v = (i < a.c_.size() ? a.c_[i] : 0) - (i < b.c_.size() ? b.c_[i] : 0);
        out.c_[i] = ((v % a.p_) + a.p_) % a.p_;
    }
    out.trim();
    return out;
}

PolyModP operator*(const PolyModP& a, const PolyModP& b) {
    PolyModP out(a.p_);
    if (a.is_zero() || b.is_zero()) return out;
    out.c_.assign(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j)
            out.c_[i + j] = (out.c_[i + j] + mulmod(a.c_[i], b.c_[j], a.p_)) % a.p_;
    }
    out.trim();
    return out;
}

PolyModP PolyModP::operator*(long k) const {
    PolyModP out(p_);
    k %= p_;
    if (k < 0) k += p_;
    out.c_ = c_;
    for (auto& v : out.c_) v = mulmod(v, k, p_);
    out.trim();
    return out;
}

bool operator<(const PolyModP& a, const PolyModP& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (int i = a.degree(); i >= 0; --i)
        if (a.coeff(i) != b.coeff(i)) return a.coeff(i) < b.coeff(i);
    return false;
}

PolyModP PolyModP::derivative() const {
    PolyModP out(p_);
    if (c_.size() <= 1) return out;
    out.c_.assign(c_.size() - 1, 0);
    for (size_t i = 1; i < c_.size(); ++i) out.c_[i - 1] = mulmod(c_[i], static_cast<long>(i % static_cast<size_t>(p_)), p_);
    out.trim();
    return out;
}

long PolyModP::eval(long x) const {
    long acc = 0;
    x %= p_;
    if (x < 0) x += p_;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = (mulmod(acc, x, p_) + *it) % p_;
    return acc;
}

void PolyModP::divrem(const PolyModP& a, const PolyModP& b, PolyModP& q, PolyModP& r) {
    if (b.is_zero()) throw Error("PolyModP division by zero");
    long p = a.p_;
    q = PolyModP(p);
    r = a;
    long lcinv = inv_mod(b.leading(), p);
    int db = b.degree();
    if (r.degree() >= db) q.c_.assign(static_cast<size_t>(r.degree() - db) + 1, 0);
    while (!r.is_zero() && r.degree() >= db) {
        long t = mulmod(r.leading(), lcinv, p);
        int shift = r.degree() - db;
        q.c_[static_cast<size_t>(shift)] = t;
        for (int j = 0; j <= db; ++j) {
            long& rc = r.c_[static_cast<size_t>(shift + j)];
            rc = (rc - mulmod(t, b.coeff(j), p)) % p;
            if (rc < 0) rc += p;
        }
        r.trim();
    }
    q.trim();
}

PolyModP gcd(PolyModP a, PolyModP b) {
    while (!b.is_zero()) {
        PolyModP q, r;
        PolyModP::divrem(a, b, q, r);
        a = b;
        b = r;
    }
    return a.monic();
}

PolyModP PolyModP::powmod(const Int& e, const PolyModP& mod) const {
    PolyModP base = *this, q, r;
    divrem(base, mod, q, r);
    base = r;
    PolyModP acc = PolyModP::constant(p_, 1);
    Int k = e;
    while (k > 0) {
        if (mpz_odd_p(k.get_mpz_t())) {
            acc = acc * base;
            divrem(acc, mod, q, r);
            acc = r;
        }
        k >>= 1;
        if (k > 0) {
            base = base * base;
            divrem(base, mod, q, r);
            base = r;
        }
    }
    return acc;
}

PolyZ PolyModP::lift_balanced() const {
    std::vector<Int> c;
    c.reserve(c_.size());
    for (long v : c_) c.emplace_back(2 * v > p_ ? v - p_ : v);
    return PolyZ(std::move(c));
}

PolyZ PolyModP::lift_nonneg() const {
    std::vector<Int> c;
    c.reserve(c_.size());
    for (long v : c_) c.emplace_back(v);
    return PolyZ(std::move(c));
}

std::string PolyModP::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        long v = coeff(i);
        if (v == 0) continue;
        if (!first) os << " + ";
        if (i == 0 || v != 1) os << v;
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

namespace {

// f(x) = g(x^p) -> g, valid in characteristic p
PolyModP pth_root(const PolyModP& f) {
    long p = f.p();
    std::vector<long> c;
    c.assign(static_cast<size_t>(f.degree() / p) + 1, 0);
    for (int i = 0; i <= f.degree(); ++i) {
        if (f.coeff(i) == 0) continue;
        if (i % p != 0) throw Error("pth_root: not a p-th power");
        c[static_cast<size_t>(i / p)] = f.coeff(i); // c^p = c in F_p
    }
    return PolyModP(p, std::move(c));
}

std::vector<std::pair<PolyModP, int>> squarefree_decomposition(const PolyModP& f) {
    std::vector<std::pair<PolyModP, int>> out;
    long p = f.p();
    PolyModP fp = f.derivative();
    if (fp.is_zero()) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(f).monic()))
            out.emplace_back(g, m * static_cast<int>(p));
        return out;
    }
    PolyModP c = gcd(f, fp);
    PolyModP w, q, r;
    PolyModP::divrem(f, c, w, r);
    int i = 1;
    while (w.degree() > 0) {
        PolyModP y = gcd(w, c);
        PolyModP z;
        PolyModP::divrem(w, y, z, r);
        if (z.degree() > 0) out.emplace_back(z.monic(), i);
        PolyModP cnew;
        PolyModP::divrem(c, y, cnew, r);
        c = cnew;
        w = y;
        ++i;
    }
    if (c.degree() > 0) {
        for (auto& [g, m] : squarefree_decomposition(pth_root(c).monic()))
            out.emplace_back(g, m * static_cast<int>(p));
    }
    return out;
}

// distinct-degree splitting of a squarefree monic f
std::vector<std::pair<PolyModP, int>> ddf(const PolyModP& f) {
    std::vector<std::pair<PolyModP, int>> out;
    long p = f.p();
    PolyModP h = PolyModP::x(p);
    PolyModP fstar = f;
    for (int d = 1; 2 * d <= fstar.degree(); ++d) {
        h = h.powmod(Int(p), fstar);
        PolyModP hmx = h - PolyModP::x(p);
        PolyModP g = gcd(hmx, fstar);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            PolyModP q, r;
            PolyModP::divrem(fstar, g, q, r);
            fstar = q.monic();
            PolyModP::divrem(h, fstar, q, r);
            h = r;
        }
    }
    if (fstar.degree() > 0) out.emplace_back(fstar, fstar.degree());
    return out;
}

// equal-degree splitting (Cantor-Zassenhaus); deterministic seed
void edf(const PolyModP& f, int d, std::mt19937_64& rng, std::vector<PolyModP>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    long p = f.p();
    while (true) {
        std::vector<long> rc(static_cast<size_t>(f.degree()), 0);
        for (auto& v : rc) v = static_cast<long>(rng() % static_cast<unsigned long>(p));
        PolyModP rpoly(p, std::move(rc));
        if (rpoly.is_zero()) continue;
        PolyModP g(p);
        if (p == 2) {
            PolyModP t = rpoly, q, r;
            PolyModP::divrem(t, f, q, r);
            t = r;
            PolyModP acc = t;
            for (int i = 1; i < d; ++i) { // trace map over F_2
                t = t.powmod(Int(2), f);
                acc = acc + t;
            }
            g = gcd(acc, f);
        } else {
            Int e;
            mpz_ui_pow_ui(e.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(d));
            e = (e - 1) / 2;
            PolyModP t = rpoly.powmod(e, f);
            g = gcd(t - PolyModP::constant(p, 1), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            PolyModP q, r;
            PolyModP::divrem(f, g, q, r);
            edf(g.monic(), d, rng, out);
            edf(q.monic(), d, rng, out);
            return;
        }
    }
}

} // namespace

std::vector<FpFactor> factor_over_Fp(const PolyModP& f) {
    if (f.is_zero()) throw Error("factor_over_Fp: zero polynomial");
    if (f.p() > 100) throw Unsupported("factor_over_Fp: p > 100 out of scope");
    std::vector<FpFactor> out;
    if (f.degree() < 1) return out;
    PolyModP g = f.monic();
    std::mt19937_64 rng(0x5eb7c0de);
    for (auto& [sq, mult] : squarefree_decomposition(g)) {
        for (auto& [block, d] : ddf(sq)) {
            std::vector<PolyModP> irr;
            edf(block, d, rng, irr);
            for (auto& h : irr) out.push_back({h, mult});
        }
    }
    std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
        return a.factor < b.factor;
    });
    return out;
}

bool is_irreducible_mod_p(const PolyModP& f) {
    if (f.degree() < 1) return false;
    if (f.degree() == 1) return true;
    // x^{p^d} == x mod f for d = deg f, and no x^{p^{d/q}} fixes for prime q | d
    long p = f.p();
    int n = f.degree();
    PolyModP h = PolyModP::x(p);
    std::vector<PolyModP> frob;
    for (int i = 0; i < n; ++i) {
        h = h.powmod(Int(p), f);
        frob.push_back(h);
    }
    if (!(frob.back() == [&] { PolyModP q, r; PolyModP::divrem(PolyModP::x(p), f, q, r); return r; }()))
        return false;
    for (int q = 2; q <= n; ++q) {
        if (n % q != 0 || !is_prime(q)) continue;
        PolyModP diff = frob[static_cast<size_t>(n / q - 1)] - PolyModP::x(p);
        if (gcd(diff, f).degree() != 0) return false;
    }
    return true;
}

bool is_squarefree_mod_p(const PolyModP& f) {
    if (f.degree() < 1) return true;
    PolyModP d = f.derivative();
    if (d.is_zero()) return false;
    return gcd(f, d).degree() == 0;
}

std::vector<PolyModP> monic_irreducibles(long p, int degree) {
    std::vector<PolyModP> out;
    long count = 1;
    for (int i = 0; i < degree; ++i) count *= p;
    for (long code = 0; code < count; ++code) {
        std::vector<long> c(static_cast<size_t>(degree) + 1, 0);
        long t = code;
        for (int i = 0; i < degree; ++i) {
            c[static_cast<size_t>(i)] = t % p;
            t /= p;
        }
        c[static_cast<size_t>(degree)] = 1;
        PolyModP f(p, std::move(c));
        if (is_irreducible_mod_p(f)) out.push_back(f);
    }
    return out;
}

} // namespace septic
