#pragma once

#include <array>
#include <vector>

#include "hk3/core.hpp"
#include "hk3/poly.hpp"

namespace hk3 {

/// Projective parameters (λ0..λ4) of the cubic ΣXi = 0, ΣλiXi³ = 0.
using Lambda = std::array<Rational, 5>;

/// σ1..σ5, stored at indices 0..4.
std::array<Rational, 5> elem_sym(const Lambda& l);

struct InvariantSet {
    Rational i8, i16, i24, i32, i40, i100;
};

InvariantSet classical_invariants(const Lambda& l);

/// Π_{i<j}(λi − λj).
Rational vandermonde(const Lambda& l);

Rational delta_sing(const Lambda& l);

/// Δ_Sing as a degree-32 polynomial in λ0..λ4, built without radicals.
const PolyZ& delta_sing_poly();

/// (I8² − 2⁶I16)² − 2¹⁴I32 − 2¹¹I8I24 expanded in λ.
const PolyZ& delta_sing_invariant_poly();

/// σk as a polynomial in λ, k = 1..5.
PolyZ elem_sym_poly(int k);

/// Throws Error if some λi = 0.
Rational delta_km(const Lambda& l);

/// I8I24 + 8I32.
Rational kummer_invariant(const Lambda& l);

/// σ5³·Δ_Km(1/λ) with denominators cleared, as a polynomial in λ.
const PolyZ& delta_km_cleared_poly();

/// σ4³ − 4σ3σ4σ5 + 8σ2σ5².
const PolyZ& kummer_sigma_poly();

struct HessianEquations {
    PolyZ linear;   // ΣXi
    PolyZ quartic;  // Σi Πj≠i (λjXj), λ scaled to a primitive integer vector
};

HessianEquations hessian_equations(const Lambda& l);

/// The cleared quartic with λ as indeterminates 0..4 and X as 5..9.
Poly<10> hessian_quartic_symbolic();

using ProjPoint = std::array<Rational, 5>;

/// P_ijk in lexicographic order of {i,j,k}.
std::vector<ProjPoint> hessian_singular_points(const Lambda& l);

/// True iff p satisfies both equations and the quartic's gradient vanishes.
bool hessian_is_node(const HessianEquations& eqs, const ProjPoint& p);

bool vanishes_on_coordinate_line(const PolyZ& quartic, int i, int j);
bool vanishes_on_coordinate_line(const Poly<10>& quartic, int i, int j);
bool hessian_line_check(const Lambda& l, int i, int j);

/// Quotient of two integer polynomials in X0..X4.
struct RationalFunction {
    PolyZ num;
    PolyZ den;

    static RationalFunction of(const PolyZ& p) { return {p, PolyZ::constant(1)}; }
    friend bool operator==(const RationalFunction& x, const RationalFunction& y)
    {
        return x.num * y.den == y.num * x.den;
    }
};

RationalFunction operator+(const RationalFunction& x, const RationalFunction& y);
RationalFunction operator*(const RationalFunction& x, const RationalFunction& y);
RationalFunction reciprocal(const RationalFunction& x);

/// ι(X)i = 1/(λiXi) as rational functions of X.
std::vector<RationalFunction> enriques_map(const Lambda& l);

/// Checks eq1∘ι = eq2 and eq2∘ι = eq1 as rational-function identities.
bool enriques_involution_check(const Lambda& l);

/// Checks ι∘ι = id.
bool enriques_is_involution(const Lambda& l);

struct LocusReport {
    bool sylvester_degenerate = false;
    bool singular = false;
    bool eckardt = false;
    bool kummer = false;
};

LocusReport classify(const Lambda& l);

/// Smallest positive multiple of l with coprime integer entries.
std::array<Integer, 5> primitive_integer(const Lambda& l);

}  // namespace hk3
