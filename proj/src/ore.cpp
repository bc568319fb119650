#include "septic/ore.hpp"

#include <algorithm>
#include <sstream>

#include "septic/second_order.hpp"

namespace septic {

void SplittingType::add(int e, int f) {
    factors.emplace_back(e, f);
    std::sort(factors.begin(), factors.end());
}

int SplittingType::degree_sum() const {
    int s = 0;
    for (auto& [e, f] : factors) s += e * f;
    return s;
}

int SplittingType::primes_with_f(int f) const {
    int n = 0;
    for (auto& [e, fi] : factors)
        if (fi == f) ++n;
    return n;
}

std::vector<int> SplittingType::f_profile() const {
    std::vector<int> out;
    for (auto& [e, f] : factors) out.push_back(f);
    std::sort(out.begin(), out.end());
    return out;
}

std::string SplittingType::str() const {
    std::ostringstream os;
    os << "{";
    for (size_t i = 0; i < factors.size(); ++i) {
        if (i) os << ", ";
        os << "(" << factors[i].first << "," << factors[i].second << ")";
    }
    os << "}";
    return os.str();
}

namespace {

struct FactorWork {
    PolyModP phibar;
    int multiplicity;
    ResidualField* field = nullptr;
};

// slope comparison: h/e > hm/em
bool slope_steeper(long h, long e, long hm, long em) {
    return static_cast<__int128>(h) * em > static_cast<__int128>(hm) * e;
}

struct RefineState {
    bool chain = true;    // at most one repeated residual factor per level
    PolyZ final_phi;      // deepest lift reached
    int depth = 0;
};

// Process all sides of phi's polygon steeper than hm/em. Repeated linear
// residual roots on e = 1 sides are chased with improved lifts of the same
// reduction; other repeated factors go to second order or are recorded as
// unresolved.
void process_lift(const PolyZ& F, long p, const PolyZ& phi, const PolyModP& phibar,
                  ResidualField& field, int order, long hm, long em,
                  OreResult& result, RefineState& state) {
    if (++state.depth > 64) throw Error("refinement recursion exceeded its bound");
    state.final_phi = phi;
    PhiExpansion exp = phi_expansion(F, phi);
    if (exp.coefficients[0].is_zero()) {
        // phi divides F exactly (possible only for squarefree reducible input)
        if (phibar.degree() != 1)
            throw UnsupportedSecondOrder("exact non-linear factor of a reducible input");
        result.type.add(1, 1);
        result.notes.push_back("exact linear factor " + phi.str());
    }
    PrincipalPolygon polygon = polygon_of_expansion(exp, p, order);
    int repeated_here = 0;
    for (const auto& side : polygon.sides) {
        if (!slope_steeper(side.h, side.e, hm, em)) continue;
        ResidualPoly R = residual_polynomial(exp, p, side, &field);
        for (auto& fac : factor_over_Fq(R.poly)) {
            if (fac.multiplicity == 1) {
                result.type.add(static_cast<int>(side.e), phibar.degree() * fac.factor.degree());
                continue;
            }
            ++repeated_here;
            if (side.e == 1 && fac.factor.degree() == 1) {
                // refine: phi' = phi - lift(root) * p^h
                FqElem root = -fac.factor.coeff(0);
                Int ph;
                mpz_ui_pow_ui(ph.get_mpz_t(), static_cast<unsigned long>(p),
                              static_cast<unsigned long>(side.h));
                PolyZ corrected = phi - root.rep().lift_balanced() * ph;
                process_lift(F, p, corrected, phibar, field, order, side.h, 1, result, state);
                continue;
            }
            // genuinely second-order configurations
            if (phibar.degree() == 1 && phibar.coeff(0) == 0 && (p == 2 || p == 3)) {
                SecondOrderResult so = second_order_refine(F, p); // may throw
                for (auto& [e, f] : so.primes) result.type.add(e, f);
                std::ostringstream os;
                os << "phi=" << phi.str() << ": second order via " << so.key_polynomial;
                result.notes.push_back(os.str());
                state.chain = false; // index not sharpened through second order
                continue;
            }
            std::ostringstream os;
            os << "p=" << p << " phi=" << phi.str() << " side -" << side.h << "/" << side.e
               << ": repeated residual factor (" << fac.factor.str() << ")^" << fac.multiplicity;
            throw UnsupportedSecondOrder(os.str());
        }
    }
    if (repeated_here > 1) state.chain = false;
}

} // namespace

OreResult ore_factorization(const PolyZ& F, long p) {
    if (!F.is_monic()) throw Error("ore_factorization: monic input expected");
    if (poly_discriminant(F) == 0) throw Error("ore_factorization: input not squarefree");

    OreResult result;
    PolyModP fbar = PolyModP::from_int_poly(F, p);
    auto factors = factor_over_Fp(fbar);

    result.regular = true;
    result.complete = true;
    bool all_chains_regular = true;

    for (auto& fk : factors) {
        if (fk.multiplicity == 1) {
            // single side of length one: one prime, unramified in phi
            result.type.add(1, fk.factor.degree());
            continue;
        }
        PolyZ phi = fk.factor.lift_balanced();
        PhiExpansion exp = phi_expansion(F, phi);
        PrincipalPolygon polygon = polygon_of_expansion(exp, p, fk.multiplicity);
        result.index_lower += polygon_index(polygon, fk.factor.degree());
        ResidualField field(p, fk.factor);

        // first-order regularity with the balanced lift
        bool regular_here = true;
        for (const auto& side : polygon.sides) {
            ResidualPoly R = residual_polynomial(exp, p, side, &field);
            if (!fq_is_squarefree(R.poly)) regular_here = false;
        }
        if (!regular_here) result.regular = false;

        RefineState state;
        try {
            process_lift(F, p, phi, fk.factor, field, fk.multiplicity, 0, 1, result, state);
        } catch (const UnsupportedSecondOrder& e) {
            result.complete = false;
            result.unresolved.push_back(e.what());
            continue;
        }

        if (!regular_here && state.chain) {
            // a single refined lift may regularize this factor; if so, its
            // polygon index replaces the first-order contribution exactly
            PhiExpansion fexp = phi_expansion(F, state.final_phi);
            PrincipalPolygon fpoly = polygon_of_expansion(fexp, p, fk.multiplicity);
            bool final_regular = true;
            for (const auto& side : fpoly.sides) {
                ResidualPoly R = residual_polynomial(fexp, p, side, &field);
                if (!fq_is_squarefree(R.poly)) final_regular = false;
            }
            if (final_regular) {
                result.index_lower += polygon_index(fpoly, fk.factor.degree()) -
                                      polygon_index(polygon, fk.factor.degree());
                result.notes.push_back("phi=" + phi.str() + ": regular after lift refinement to " +
                                       state.final_phi.str());
            } else {
                all_chains_regular = false;
            }
        } else if (!regular_here) {
            all_chains_regular = false;
        }
    }

    if (result.complete && result.type.degree_sum() != F.degree())
        throw Error("ore_factorization: splitting degrees do not sum to deg F");

    if (result.regular) {
        result.index_exact = true;
    } else if (result.complete && all_chains_regular) {
        result.index_exact = true;
    } else if (result.complete) {
        // tame route: nu_p(disc) = 2 nu_p(index) + sum (e-1) f
        bool tame = true;
        long tamesum = 0;
        for (auto& [e, f] : result.type.factors) {
            if (e % p == 0) tame = false;
            tamesum += static_cast<long>(e - 1) * f;
        }
        if (tame) {
            long dval = padic_valuation(poly_discriminant(F), p).value();
            result.index_lower = (dval - tamesum) / 2;
            result.index_exact = true;
            result.notes.push_back("index from the tame discriminant identity");
        }
    }
    return result;
}

} // namespace septic
