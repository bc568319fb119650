#include "septic/newton.hpp"

#include <algorithm>
#include <numeric>

namespace septic {

PolyZ PhiExpansion::reconstruct() const {
    PolyZ acc;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * phi + *it;
    return acc;
}

PhiExpansion phi_expansion(const PolyZ& F, const PolyZ& phi) {
    if (!phi.is_monic()) throw Error("phi_expansion: phi must be monic");
    if (phi.degree() < 1 || phi.degree() > F.degree())
        throw Error("phi_expansion: need 1 <= deg phi <= deg F");
    PhiExpansion out;
    out.phi = phi;
    PolyZ cur = F;
    while (!cur.is_zero()) {
        PolyZ rem;
        PolyZ q = cur.divrem_monic(phi, rem);
        out.coefficients.push_back(rem);
        cur = q;
    }
    return out;
}

std::optional<std::pair<long, long>> PrincipalPolygon::height_at(int x) const {
    for (const auto& s : sides) {
        if (x < s.start.i || x > s.end.i) continue;
        // u_start - h*(x - start)/e
        long num = s.start.u * s.e - s.h * (x - s.start.i);
        return std::make_pair(num, s.e);
    }
    return std::nullopt;
}

PrincipalPolygon polygon_of_expansion(const PhiExpansion& exp, long p, int order) {
    PrincipalPolygon out;
    out.order = order;
    for (size_t i = 0; i < exp.coefficients.size(); ++i) {
        Valuation v = poly_valuation(exp.coefficients[i], p);
        if (!v.is_inf()) out.points.push_back({static_cast<int>(i), v.value()});
    }
    // lower hull over abscissas [0, order]; all slopes there are negative
    std::vector<PolygonPoint> hull;
    for (const auto& pt : out.points) {
        if (pt.i > order) break;
        while (hull.size() >= 2) {
            const auto& a = hull[hull.size() - 2];
            const auto& b = hull[hull.size() - 1];
            // keep turn strictly convex; collinear middle points drop out
            __int128 lhs = static_cast<__int128>(b.u - a.u) * (pt.i - a.i);
            __int128 rhs = static_cast<__int128>(pt.u - a.u) * (b.i - a.i);
            if (lhs >= rhs) hull.pop_back();
            else break;
        }
        hull.push_back(pt);
    }
    for (size_t k = 0; k + 1 < hull.size(); ++k) {
        const auto& a = hull[k];
        const auto& b = hull[k + 1];
        if (b.u >= a.u) continue; // principal part keeps negative slopes only
        long rise = a.u - b.u, run = b.i - a.i;
        long g = std::gcd(rise, run);
        out.sides.push_back({a, b, rise / g, run / g});
    }
    return out;
}

PrincipalPolygon principal_polygon(const PolyZ& F, const PolyZ& phi, long p) {
    PolyModP fbar = PolyModP::from_int_poly(F, p);
    PolyModP phibar = PolyModP::from_int_poly(phi, p);
    if (phibar.degree() != phi.degree())
        throw NotAFactor("phi is not monic mod p");
    // order of phi-bar in F-bar
    int order = 0;
    PolyModP cur = fbar;
    while (true) {
        PolyModP q, r;
        PolyModP::divrem(cur, phibar, q, r);
        if (!r.is_zero()) break;
        ++order;
        cur = q;
    }
    if (order == 0) throw NotAFactor("phi-bar does not divide F-bar mod p");
    PhiExpansion exp = phi_expansion(F, phi);
    return polygon_of_expansion(exp, p, order);
}

ResidualPoly residual_polynomial(const PhiExpansion& exp, long p, const Side& side,
                                 const ResidualField* field) {
    int d = side.degree();
    std::vector<FqElem> coeffs(static_cast<size_t>(d) + 1, field->zero());
    for (int j = 0; j <= d; ++j) {
        int i = side.start.i + j * static_cast<int>(side.e);
        long height = side.start.u - j * side.h;
        if (i >= static_cast<int>(exp.coefficients.size())) break;
        const PolyZ& a = exp.coefficients[static_cast<size_t>(i)];
        Valuation v = poly_valuation(a, p);
        if (v.is_inf() || v.value() > height) continue; // strictly above the side
        if (v.value() < height) throw Error("residual_polynomial: point below its side");
        // every coefficient of a_i has nu_p >= height, so division is exact
        Int pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p), static_cast<unsigned long>(height));
        std::vector<Int> scaled(a.coeffs());
        for (auto& c : scaled)
            if (c != 0) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), pk.get_mpz_t());
        coeffs[static_cast<size_t>(j)] = field->reduce_int_poly(PolyZ(std::move(scaled)));
    }
    return {FqPoly(field, std::move(coeffs)), field};
}

long polygon_index(const PrincipalPolygon& polygon, int deg_phi) {
    // half-open abscissa ranges (start, end] per side count each column once;
    // the principal part starts at x = 0, so every column x >= 1 is covered
    long count = 0;
    for (const auto& s : polygon.sides) {
        for (int x = s.start.i + 1; x <= s.end.i; ++x) {
            if (x < 1) continue;
            long num = s.start.u * s.e - s.h * (x - s.start.i);
            long floor_h = num >= 0 ? num / s.e : -((-num + s.e - 1) / s.e);
            count += std::max(0L, floor_h);
        }
    }
    return count * deg_phi;
}

bool is_p_regular(const PolyZ& F, long p) {
    PolyModP fbar = PolyModP::from_int_poly(F, p);
    for (auto& fk : factor_over_Fp(fbar)) {
        if (fk.multiplicity == 1) continue; // single length-1 side, linear residual
        PolyZ phi = fk.factor.lift_balanced();
        PhiExpansion exp = phi_expansion(F, phi);
        PrincipalPolygon poly = polygon_of_expansion(exp, p, fk.multiplicity);
        ResidualField field(p, fk.factor);
        for (const auto& side : poly.sides) {
            ResidualPoly R = residual_polynomial(exp, p, side, &field);
            if (!fq_is_squarefree(R.poly)) return false;
        }
    }
    return true;
}

} // namespace septic
