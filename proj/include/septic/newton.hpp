#pragma once

#include <optional>

#include "septic/fq.hpp"
#include "septic/poly.hpp"

namespace septic {

/// phi-adic digits of F: F = sum a_i(x) phi(x)^i with deg a_i < deg phi.
struct PhiExpansion {
    PolyZ phi;
    std::vector<PolyZ> coefficients; // index i holds a_i

    PolyZ reconstruct() const;
};

PhiExpansion phi_expansion(const PolyZ& F, const PolyZ& phi);

struct PolygonPoint {
    int i;
    long u; // nu_p of the i-th expansion coefficient (finite points only)
};

/// One side of the principal polygon: slope -h/e in lowest terms, h >= 1.
struct Side {
    PolygonPoint start;
    PolygonPoint end;
    long h = 0;
    long e = 1;
    int length() const { return end.i - start.i; }
    int degree() const { return length() / static_cast<int>(e); }
};

struct PrincipalPolygon {
    std::vector<Side> sides;            // slopes strictly increasing
    std::vector<PolygonPoint> points;   // all finite expansion points
    int order = 0;                      // multiplicity of phi-bar in F-bar

    bool empty() const { return sides.empty(); }
    /// Height of the polygon above abscissa x (rational h_num/h_den), if x
    /// lies within the principal span.
    std::optional<std::pair<long, long>> height_at(int x) const;
};

/// Lower convex hull of {(i, nu_p(a_i))} restricted to the principal part.
/// Collinear points merge into maximal sides. Throws NotAFactor when phi-bar
/// does not divide F-bar mod p.
PrincipalPolygon principal_polygon(const PolyZ& F, const PolyZ& phi, long p);

/// Polygon from a precomputed expansion (used by refinement steps).
PrincipalPolygon polygon_of_expansion(const PhiExpansion& exp, long p, int order);

struct ResidualPoly {
    FqPoly poly;          // R(y), degree = side degree
    const ResidualField* field;
};

/// Residual polynomial of F attached to one side, over F_phi.
/// Requires deg(phi-bar) <= 3 (project scope).
ResidualPoly residual_polynomial(const PhiExpansion& exp, long p, const Side& side,
                                 const ResidualField* field);

/// deg(phi) x #{lattice points (x,y): x >= 1, y >= 1, on or below the polygon}.
long polygon_index(const PrincipalPolygon& polygon, int deg_phi);

/// True iff every residual polynomial of every side is square-free, for every
/// irreducible factor of F-bar (balanced monic lifts).
bool is_p_regular(const PolyZ& F, long p);

} // namespace septic
