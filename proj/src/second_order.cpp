#include "septic/second_order.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace septic {

Valuation omega2_valuation(const PolyZ& f, long p, long h1, long e1) {
    Valuation best = Valuation::inf();
    for (int j = 0; j <= f.degree(); ++j) {
        const Int& c = f.coeff(j);
        if (c == 0) continue;
        Valuation v = Valuation::of(e1 * padic_valuation(c, p).value() + h1 * j);
        if (v < best) best = v;
    }
    return best;
}

namespace {

bool is_trinomial_shape(const PolyZ& F) {
    if (F.degree() != 7 || !F.is_monic()) return false;
    for (int i = 2; i <= 6; ++i)
        if (F.coeff(i) != 0) return false;
    return true;
}

struct HullPoint {
    int i;
    long u;
};

// lower convex hull, collinear points merged, all-negative-slope span
std::vector<HullPoint> lower_hull(std::vector<HullPoint> pts) {
    std::sort(pts.begin(), pts.end(), [](const HullPoint& a, const HullPoint& b) { return a.i < b.i; });
    std::vector<HullPoint> hull;
    for (const auto& pt : pts) {
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            __int128 lhs = static_cast<__int128>(b.u - a.u) * (pt.i - a.i);
            __int128 rhs = static_cast<__int128>(pt.u - a.u) * (b.i - a.i);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    return hull;
}

// ---------------------------------------------------------------- p = 2 ----

SecondOrderResult refine_p2(const PolyZ& F) {
    const Int& a = F.coeff(1);
    const Int& b = F.coeff(0);
    long va = padic_valuation(a, 2).value();
    long vb = padic_valuation(b, 2).value();
    if (!((va == 2 || va == 4) && vb >= va + 1))
        throw UnsupportedSecondOrder("p=2 second order expects nu2(a) in {2,4}, nu2(b) > nu2(a)");
    long h1 = va / 2, e1 = 3;

    std::vector<PolyZ> candidates;
    if (va == 2) {
        candidates.push_back(PolyZ{2, 0, 0, 1});      // x^3 + 2
        candidates.push_back(PolyZ{2, 2, 0, 1});      // x^3 + 2x + 2
    } else {
        candidates.push_back(PolyZ{4, 0, 0, 1});      // x^3 + 4
        candidates.push_back(PolyZ{4, 4, 0, 1});      // x^3 + 4x + 4
    }

    std::string failure;
    for (const PolyZ& phi2 : candidates) {
        PhiExpansion exp = phi_expansion(F, phi2);
        long V = omega2_valuation(phi2, 2, h1, e1).value();
        std::vector<HullPoint> pts;
        for (size_t i = 0; i < exp.coefficients.size(); ++i) {
            Valuation w = omega2_valuation(exp.coefficients[i], 2, h1, e1);
            if (!w.is_inf()) pts.push_back({static_cast<int>(i), w.value() + static_cast<long>(i) * V});
        }
        auto hull = lower_hull(pts);

        SecondOrderResult out;
        out.key_polynomial = phi2.str();
        for (const auto& pt : pts) out.polygon_points.emplace_back(pt.i, pt.u);

        bool ok = true;
        ResidualField f2(2, PolyModP::x(2));
        for (size_t k = 0; k + 1 < hull.size() && ok; ++k) {
            const auto& A = hull[k];
            const auto& B = hull[k + 1];
            long rise = A.u - B.u, run = B.i - A.i;
            long g = std::gcd(rise, run);
            long h2 = rise / g, e2 = run / g;
            int d2 = static_cast<int>(run / e2);
            if (d2 == 1) {
                out.primes.emplace_back(static_cast<int>(e1 * e2), 1);
                continue;
            }
            if (d2 == 2 && e2 == 1) {
                // residue field F_2: on-side coefficients are 1, off-side 0
                std::vector<FqElem> rc;
                for (int j = 0; j <= 2; ++j) {
                    long height = A.u - j * h2;
                    bool on = false;
                    for (const auto& pt : pts)
                        if (pt.i == A.i + j && pt.u == height) on = true;
                    rc.push_back(on ? f2.one() : f2.zero());
                }
                FqPoly R2(&f2, std::move(rc));
                out.residuals.push_back(R2.str());
                if (!fq_is_squarefree(R2)) {
                    ok = false; // try the next key polynomial
                    failure = "repeated residual root for " + phi2.str();
                    break;
                }
                for (auto& fac : factor_over_Fq(R2))
                    out.primes.emplace_back(static_cast<int>(e1), fac.factor.degree());
                continue;
            }
            ok = false;
            failure = "unexpected second-order side shape for " + phi2.str();
        }
        if (!ok) continue;
        int total = 0;
        for (auto& [e, f] : out.primes) total += e * f;
        if (total != 6) throw Error("second order p=2: degree bookkeeping failed");
        return out;
    }
    throw UnsupportedSecondOrder("p=2 second order: no key polynomial separated the side (" + failure + ")");
}

// ---------------------------------------------------------------- p = 3 ----

// Z[pi]/(pi^2 - 3): elements u + v*pi
struct OL {
    Int u, v;
    bool is_zero() const { return u == 0 && v == 0; }
};

OL ol_add(const OL& a, const OL& b) { return {a.u + b.u, a.v + b.v}; }
OL ol_sub(const OL& a, const OL& b) { return {a.u - b.u, a.v - b.v}; }
OL ol_mul(const OL& a, const OL& b) {
    return {a.u * b.u + 3 * a.v * b.v, a.u * b.v + a.v * b.u};
}

long ol_val(const OL& a) { // nu_L, with nu_L(pi) = 1; LONG_MAX for 0
    if (a.is_zero()) return std::numeric_limits<long>::max();
    long vu = a.u == 0 ? std::numeric_limits<long>::max() : 2 * padic_valuation(a.u, 3).value();
    long vv = a.v == 0 ? std::numeric_limits<long>::max() : 2 * padic_valuation(a.v, 3).value() + 1;
    return std::min(vu, vv);
}

// divide by pi^k (exact)
OL ol_div_pi(const OL& a, long k) {
    OL r = a;
    long rem = k;
    while (rem >= 2) {
        // divide by pi^2 = 3
        Int qu, qv;
        mpz_divexact_ui(qu.get_mpz_t(), r.u.get_mpz_t(), 3);
        mpz_divexact_ui(qv.get_mpz_t(), r.v.get_mpz_t(), 3);
        r = {qu, qv};
        rem -= 2;
    }
    if (rem == 1) {
        // (u + v pi)/pi = v + (u/3) pi
        Int q;
        mpz_divexact_ui(q.get_mpz_t(), r.u.get_mpz_t(), 3);
        r = {r.v, q};
    }
    return r;
}

using OLPoly = std::vector<OL>; // constant first

void ol_trim(OLPoly& f) {
    while (!f.empty() && f.back().is_zero()) f.pop_back();
}

int ol_deg(const OLPoly& f) { return static_cast<int>(f.size()) - 1; }

// division by a monic integer-coefficient divisor
void ol_divrem_monic(const OLPoly& a, const PolyZ& divisor, OLPoly& q, OLPoly& r) {
    r = a;
    int dd = divisor.degree();
    q.clear();
    if (ol_deg(r) >= dd) q.assign(static_cast<size_t>(ol_deg(r) - dd) + 1, OL{0, 0});
    for (int i = ol_deg(r); i >= dd; --i) {
        OL t = r[static_cast<size_t>(i)];
        if (t.is_zero()) continue;
        q[static_cast<size_t>(i - dd)] = t;
        for (int j = 0; j <= dd; ++j) {
            OL sub = ol_mul(t, OL{divisor.coeff(j), 0});
            r[static_cast<size_t>(i - dd + j)] = ol_sub(r[static_cast<size_t>(i - dd + j)], sub);
        }
    }
    ol_trim(r);
    ol_trim(q);
}

// reduce an OL polynomial mod pi to F_3[z]
PolyModP ol_reduce(const OLPoly& f) {
    std::vector<long> c;
    c.reserve(f.size());
    for (const auto& t : f) c.push_back(mod_long(t.u, 3));
    return PolyModP(3, std::move(c));
}

struct LPrime {
    long e_l;
    int f_l;
};

SecondOrderResult refine_p3(const PolyZ& F) {
    const Int& a = F.coeff(1);
    const Int& b = F.coeff(0);
    long va = padic_valuation(a, 3).value();
    long vb = padic_valuation(b, 3).value();
    if (va != 3 || vb < 4)
        throw UnsupportedSecondOrder("p=3 second order expects nu3(a) = 3, nu3(b) >= 4");

    // G(z) = F(pi z) over O_L; pi^7 = 27 pi
    OLPoly G(8, OL{0, 0});
    G[0] = {b, 0};
    G[1] = {Int(0), a};
    G[7] = {Int(0), 27};

    // unit part of the slope-0 piece: z^7 + a3 z = z (z^6 + a3) over F_3
    Int a3 = unit_part(a, 3);
    long a3m = mod_long(a3, 3);
    PolyModP unitpart(3, {0, a3m, 0, 0, 0, 0, 0, 1});
    auto lfactors = factor_over_Fp(unitpart);

    SecondOrderResult out;
    std::ostringstream keydesc;

    // sigma: pi -> -pi acts as z -> -z on reductions; mirror-pair detection
    auto mirror_of = [](const PolyModP& g) {
        std::vector<long> c(g.coeffs());
        for (size_t i = 1; i < c.size(); i += 2) c[i] = (3 - c[i]) % 3;
        PolyModP m(3, std::move(c));
        return m.monic();
    };

    std::vector<PolyModP> processed;
    for (auto& fk : lfactors) {
        if (fk.factor == PolyModP::x(3)) continue; // slope > 0 piece, handled first order
        PolyModP mirror = mirror_of(fk.factor);
        bool mirror_pair = !(mirror == fk.factor);
        if (mirror_pair) {
            bool seen = false;
            for (auto& g : processed)
                if (g == mirror) seen = true;
            if (seen) continue;
        }
        processed.push_back(fk.factor);

        PolyZ philift = fk.factor.lift_balanced();
        keydesc << (keydesc.tellp() > 0 ? ", " : "") << "z = x/sqrt(3): " << philift.str();
        OLPoly cur = G;
        std::vector<OLPoly> digits;
        while (ol_deg(cur) >= 0) {
            OLPoly q, r;
            ol_divrem_monic(cur, philift, q, r);
            digits.push_back(r);
            cur = q;
            if (digits.size() > 16) throw Error("second order p=3: runaway expansion");
        }

        std::vector<HullPoint> pts;
        for (size_t i = 0; i < digits.size(); ++i) {
            long v = std::numeric_limits<long>::max();
            for (const auto& t : digits[i]) v = std::min(v, ol_val(t));
            if (v != std::numeric_limits<long>::max())
                pts.push_back({static_cast<int>(i), v});
        }
        auto hull = lower_hull(pts);
        if (out.polygon_points.empty())
            for (const auto& pt : pts) out.polygon_points.emplace_back(pt.i, pt.u);

        ResidualField field(3, fk.factor);
        std::vector<LPrime> lprimes;
        for (size_t k = 0; k + 1 < hull.size(); ++k) {
            const auto& A = hull[k];
            const auto& B = hull[k + 1];
            if (B.u >= A.u) continue; // principal part only
            long rise = A.u - B.u, run = B.i - A.i;
            long g = std::gcd(rise, run);
            long h2 = rise / g, e2 = run / g;
            int d2 = static_cast<int>(run / e2);
            // residual polynomial over F_phi
            std::vector<FqElem> rc(static_cast<size_t>(d2) + 1, field.zero());
            for (int j = 0; j <= d2; ++j) {
                int i = A.i + j * static_cast<int>(e2);
                long height = A.u - j * h2;
                if (i >= static_cast<int>(digits.size())) break;
                long v = std::numeric_limits<long>::max();
                for (const auto& t : digits[static_cast<size_t>(i)]) v = std::min(v, ol_val(t));
                if (v != height) continue;
                OLPoly scaled = digits[static_cast<size_t>(i)];
                for (auto& t : scaled) t = ol_div_pi(t, height);
                rc[static_cast<size_t>(j)] = field.reduce(ol_reduce(scaled));
            }
            FqPoly R(&field, std::move(rc));
            out.residuals.push_back(R.str());
            if (!fq_is_squarefree(R))
                throw UnsupportedSecondOrder("p=3 second order: repeated residual factor over L");
            for (auto& fac : factor_over_Fq(R))
                lprimes.push_back({e2, fk.factor.degree() * fac.factor.degree()});
        }

        if (mirror_pair) {
            // each L-prime pairs with its Galois image from the mirror factor
            for (auto& P : lprimes)
                out.primes.emplace_back(static_cast<int>(2 * P.e_l), P.f_l);
        } else {
            // Galois-stable factor: every L-prime is its own conjugate; the
            // global prime has even ramification, so e_L odd forces e = 2e_L
            // and halves the residue degree. (Checked against root counts in
            // the two ramified quadratic extensions.)
            for (auto& P : lprimes) {
                if (P.e_l % 2 == 0)
                    throw UnsupportedSecondOrder("p=3 second order: even L-ramification out of scope");
                if (P.f_l % 2 != 0)
                    throw UnsupportedSecondOrder("p=3 second order: odd residue degree on the stable branch");
                out.primes.emplace_back(static_cast<int>(2 * P.e_l), P.f_l / 2);
            }
        }
    }

    out.key_polynomial = keydesc.str();
    int total = 0;
    for (auto& [e, f] : out.primes) total += e * f;
    if (total != 6) throw Error("second order p=3: degree bookkeeping failed");
    return out;
}

} // namespace

SecondOrderResult second_order_refine(const PolyZ& F, long p) {
    if (!is_trinomial_shape(F))
        throw UnsupportedSecondOrder("second order handled for x^7 + ax + b only");
    if (p == 2) return refine_p2(F);
    if (p == 3) return refine_p3(F);
    throw UnsupportedSecondOrder("second order handled at p = 2, 3 only");
}

} // namespace septic
