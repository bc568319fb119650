#include "septic/poly.hpp"

#include <sstream>

namespace septic {

namespace {
const Int kZero = 0;
}

void PolyZ::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

PolyZ PolyZ::x() { return PolyZ{0, 1}; }

PolyZ PolyZ::constant(const Int& v) { return PolyZ{v}; }

PolyZ PolyZ::monomial(int deg, const Int& v) {
    std::vector<Int> c(static_cast<size_t>(deg) + 1, Int(0));
    c.back() = v;
    return PolyZ(std::move(c));
}

const Int& PolyZ::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
    return c_[static_cast<size_t>(i)];
}

const Int& PolyZ::leading() const {
    if (c_.empty()) return kZero;
    return c_.back();
}

Int PolyZ::eval(const Int& x) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

PolyZ PolyZ::operator-() const {
    PolyZ out = *this;
    for (auto& v : out.c_) v = -v;
    return out;
}

PolyZ operator+(const PolyZ& a, const PolyZ& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), Int(0));
    for (size_t i = 0; i < c.size(); ++i) {
        if (i < a.c_.size()) c[i] += a.c_[i];
        if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return PolyZ(std::move(c));
}

PolyZ operator-(const PolyZ& a, const PolyZ& b) { return a + (-b); }

PolyZ operator*(const PolyZ& a, const PolyZ& b) {
    if (a.is_zero() || b.is_zero()) return PolyZ();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, Int(0));
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    return PolyZ(std::move(c));
}

PolyZ PolyZ::operator*(const Int& k) const {
    PolyZ out = *this;
    for (auto& v : out.c_) v *= k;
    out.trim();
    return out;
}

PolyZ PolyZ::derivative() const {
    if (c_.size() <= 1) return PolyZ();
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Int(static_cast<long>(i));
    return PolyZ(std::move(c));
}

PolyZ PolyZ::divrem_monic(const PolyZ& divisor, PolyZ& rem) const {
    if (!divisor.is_monic()) throw Error("divrem_monic: divisor must be monic");
    std::vector<Int> r = c_;
    int dd = divisor.degree();
    if (degree() < dd) {
        rem = *this;
        return PolyZ();
    }
    std::vector<Int> q(static_cast<size_t>(degree() - dd) + 1, Int(0));
    for (int i = degree(); i >= dd; --i) {
        Int t = r[static_cast<size_t>(i)];
        if (t == 0) continue;
        q[static_cast<size_t>(i - dd)] = t;
        for (int j = 0; j <= dd; ++j) r[static_cast<size_t>(i - dd + j)] -= t * divisor.coeff(j);
    }
    rem = PolyZ(std::move(r));
    return PolyZ(std::move(q));
}

PolyZ PolyZ::translate(const Int& t) const {
    // Horner: f(x+t) built from the top coefficient down
    PolyZ out;
    PolyZ shift{t, 1};
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) out = out * shift + PolyZ::constant(*it);
    return out;
}

Int PolyZ::content() const {
    Int g = 0;
    for (const auto& v : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    return g;
}

std::string PolyZ::str() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& v = coeff(i);
        if (v == 0) continue;
        if (!first) os << (v > 0 ? " + " : " - ");
        else if (v < 0) os << "-";
        Int a = abs(Int(v));
        if (i == 0 || a != 1) os << a.get_str();
        if (i >= 1) os << "x";
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

Int resultant(const PolyZ& f, const PolyZ& g) {
    if (f.is_zero() || g.is_zero()) throw Error("resultant of zero polynomial");
    int m = f.degree(), n = g.degree();
    if (m == 0) {
        Int out;
        mpz_pow_ui(out.get_mpz_t(), f.coeff(0).get_mpz_t(), static_cast<unsigned long>(n));
        return out;
    }
    if (n == 0) {
        Int out;
        mpz_pow_ui(out.get_mpz_t(), g.coeff(0).get_mpz_t(), static_cast<unsigned long>(m));
        return out;
    }
    // Sylvester matrix, fraction-free Gaussian elimination (Bareiss).
    int N = m + n;
    std::vector<std::vector<Int>> a(static_cast<size_t>(N), std::vector<Int>(static_cast<size_t>(N), Int(0)));
    for (int r = 0; r < n; ++r)
        for (int j = 0; j <= m; ++j) a[r][r + j] = f.coeff(m - j);
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= n; ++j) a[n + r][r + j] = g.coeff(n - j);

    int sign = 1;
    Int prev = 1;
    for (int k = 0; k < N - 1; ++k) {
        if (a[static_cast<size_t>(k)][static_cast<size_t>(k)] == 0) {
            int piv = -1;
            for (int r = k + 1; r < N; ++r)
                if (a[static_cast<size_t>(r)][static_cast<size_t>(k)] != 0) { piv = r; break; }
            if (piv < 0) return Int(0);
            std::swap(a[static_cast<size_t>(k)], a[static_cast<size_t>(piv)]);
            sign = -sign;
        }
        for (int i = k + 1; i < N; ++i) {
            for (int j = k + 1; j < N; ++j) {
                Int t = a[static_cast<size_t>(i)][static_cast<size_t>(j)] * a[static_cast<size_t>(k)][static_cast<size_t>(k)]
                      - a[static_cast<size_t>(i)][static_cast<size_t>(k)] * a[static_cast<size_t>(k)][static_cast<size_t>(j)];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[static_cast<size_t>(i)][static_cast<size_t>(j)] = t;
            }
            a[static_cast<size_t>(i)][static_cast<size_t>(k)] = 0;
        }
        prev = a[static_cast<size_t>(k)][static_cast<size_t>(k)];
    }
    Int det = a[static_cast<size_t>(N - 1)][static_cast<size_t>(N - 1)];
    return sign > 0 ? det : Int(-det);
}

Int poly_discriminant(const PolyZ& f) {
    int n = f.degree();
    if (n < 1) throw Error("discriminant needs degree >= 1");
    PolyZ fp = f.derivative();
    if (fp.is_zero()) return Int(0);
    Int res = resultant(f, fp);
    Int lc = f.leading();
    Int d;
    mpz_divexact(d.get_mpz_t(), res.get_mpz_t(), lc.get_mpz_t());
    long e = (static_cast<long>(n) * (n - 1) / 2) % 2;
    return e ? Int(-d) : d;
}

PolyZ charpoly_of_element(const PolyZ& g, const PolyZ& F) {
    if (!F.is_monic()) throw Error("charpoly_of_element: F must be monic");
    int n = F.degree();
    PolyZ rem;
    g.divrem_monic(F, rem);
    PolyZ gmod = rem;

    // multiplication-by-g matrix on the basis 1, x, ..., x^{n-1} of Z[x]/(F)
    std::vector<std::vector<Int>> M(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
    PolyZ col = gmod;
    for (int j = 0; j < n; ++j) {
        for (int i = 0; i < n; ++i) M[static_cast<size_t>(i)][static_cast<size_t>(j)] = col.coeff(i);
        col = (col * PolyZ::x()).divrem_monic(F, rem), col = rem;
    }

    // Faddeev-LeVerrier: exact integer recursion for det(yI - M)
    std::vector<Int> coeffs(static_cast<size_t>(n) + 1, Int(0));
    coeffs[static_cast<size_t>(n)] = 1;
    std::vector<std::vector<Int>> Mk = M;
    for (int k = 1; k <= n; ++k) {
        Int tr = 0;
        for (int i = 0; i < n; ++i) tr += Mk[static_cast<size_t>(i)][static_cast<size_t>(i)];
        Int ck;
        mpz_divexact(ck.get_mpz_t(), tr.get_mpz_t(), Int(k).get_mpz_t());
        ck = -ck;
        coeffs[static_cast<size_t>(n - k)] = ck;
        if (k == n) break;
        for (int i = 0; i < n; ++i) Mk[static_cast<size_t>(i)][static_cast<size_t>(i)] += ck;
        // Mk <- M * Mk
        std::vector<std::vector<Int>> next(static_cast<size_t>(n), std::vector<Int>(static_cast<size_t>(n), Int(0)));
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l) {
                if (M[static_cast<size_t>(i)][static_cast<size_t>(l)] == 0) continue;
                for (int j = 0; j < n; ++j)
                    next[static_cast<size_t>(i)][static_cast<size_t>(j)] +=
                        M[static_cast<size_t>(i)][static_cast<size_t>(l)] * Mk[static_cast<size_t>(l)][static_cast<size_t>(j)];
            }
        Mk = std::move(next);
    }
    return PolyZ(std::move(coeffs));
}

Valuation poly_valuation(const PolyZ& f, long p) {
    Valuation best = Valuation::inf();
    for (const auto& c : f.coeffs()) {
        if (c == 0) continue;
        Valuation v = padic_valuation(c, p);
        if (v < best) best = v;
    }
    return best;
}

} // namespace septic
