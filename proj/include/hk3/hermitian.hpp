#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hk3/eisenstein.hpp"
#include "hk3/period.hpp"

namespace hk3 {

using EisMat4 = Mat<Eis, 4, 4>;
/// 4x4 matrix over Z[w] with blocks [[A, B], [C, D]].
using HermMatrix4 = EisMat4;

/// B = [[m1, m3 + w m4], [m3 + w^2 m4, m2]].
struct HermB {
    Integer m1, m2, m3, m4;

    EisMat2 matrix() const;
    /// Throws Error unless m is Hermitian (integral diagonal, B21 = conj B12).
    static HermB from_matrix(const EisMat2& m);
    /// The off-diagonal entry m3 + w m4 as a B with zero diagonal.
    static HermB off_diagonal(const Eis& b12);
    static HermB diagonal(const Integer& m1, const Integer& m2);
    HermB operator-() const { return {-m1, -m2, -m3, -m4}; }
    bool is_zero() const { return m1 == 0 && m2 == 0 && m3 == 0 && m4 == 0; }
    friend bool operator==(const HermB&, const HermB&) = default;
};

EisMat4 from_blocks(const EisMat2& a, const EisMat2& b, const EisMat2& c, const EisMat2& d);
EisMat2 block(const EisMat4& g, int row, int col);
EisMat4 conj_transpose(const EisMat4& g);
/// Entrywise complex conjugate.
EisMat4 conj(const EisMat4& g);
const EisMat4& hermitian_j();

enum class HClass { not_in_hgamma = 0, hgamma = 1, hgamma0 = 2, hgamma1 = 3 };
std::string to_string(HClass c);

/// Finest class among HGamma, HGamma_0(2), HGamma_1(2).
HClass membership(const EisMat4& g);

/// [[A, 0], [0, A^{*-1}]]
EisMat4 g_a(const EisMat2& a);
/// [[I, B], [0, I]]
EisMat4 g_b_upper(const HermB& b);
/// [[I, 0], [2B, I]]
EisMat4 g_b_lower(const HermB& b);
/// Inverse of an element of HGamma: -J g^* J.
EisMat4 inverse(const EisMat4& g);

struct HToken {
    enum class Kind { a, upper, lower };
    Kind kind;
    EisMat2 a;
    HermB b;

    static HToken make_a(const EisMat2& m) { return {Kind::a, m, {}}; }
    static HToken make_upper(const HermB& m) { return {Kind::upper, EisMat2::identity(), m}; }
    static HToken make_lower(const HermB& m) { return {Kind::lower, EisMat2::identity(), m}; }
    EisMat4 matrix() const;
    HToken inverse() const;
    std::string str() const;
};

using GenWordH = std::vector<HToken>;
EisMat4 product(const GenWordH& w);

/// Linear fractional action (A tau + B)(C tau + D)^{-1} for any matrix with
/// Cτ + D invertible; no membership test.
HermitianPoint fractional(const EisMat4& g, const HermitianPoint& tau);
/// Throws Error unless g is in HGamma and tau in H_2.
HermitianPoint moebius(const EisMat4& g, const HermitianPoint& tau);
HermitianPoint involution_t(const HermitianPoint& tau);
/// tau -> -(1/2) tau^{-1}, the action of W = [[0, -I], [2I, 0]].
HermitianPoint involution_w(const HermitianPoint& tau);
/// W g W^{-1}; requires C = 0 mod 2 so that the result is integral.
EisMat4 conj_by_w(const EisMat4& g);

/// Word over gA (A in G(2)), g(B)^*, g(B)_* whose product is g.
GenWordH decompose_hgamma1(const EisMat4& g);

// --- reduction mod 2 -----------------------------------------------------------

/// Element of F_4 = Z[w]/2, as the parities of the (1, w) coordinates.
struct F4 {
    int a = 0, b = 0;

    F4() = default;
    F4(int x) : a(x & 1), b(0) {}
    F4(int a_, int b_) : a(a_ & 1), b(b_ & 1) {}
    static F4 reduce(const Eis& x);
    Eis lift() const { return {a, b}; }
    friend bool operator==(const F4&, const F4&) = default;
    friend F4 operator+(const F4& x, const F4& y) { return {x.a ^ y.a, x.b ^ y.b}; }
    friend F4 operator*(const F4& x, const F4& y)
    {
        return reduce(x.lift() * y.lift());
    }
    F4& operator+=(const F4& y) { return *this = *this + y; }
    std::string str() const;
};

using F4Matrix = Mat<F4, 2, 2>;

F4Matrix reduce(const EisMat2& m);
F4 det(const F4Matrix& m);
/// Throws Error unless g is in HGamma_0(2).
F4Matrix f_mod2(const EisMat4& g);
std::string to_string(const F4Matrix& m);
/// Packs a matrix into 0..255.
int f4_code(const F4Matrix& m);

/// All elements of GL2(F_4) generated by the given matrices.
std::vector<F4Matrix> f4_closure(const std::vector<F4Matrix>& gens);
/// Generators of GL2(Z[w]) used for the section table.
const std::vector<EisMat2>& gl2_generators();
/// Integral lift in GL2(Z[w]) of an element of GL2(F_4), from a fixed table.
const EisMat2& gl2f4_section(const F4Matrix& m);
std::size_t gl2f4_section_size();

/// The 5 points of P^1(F_4) and the induced permutation of a matrix.
std::array<int, 5> p1_permutation(const F4Matrix& m);

struct Hgamma0Decomposition {
    EisMat2 a;
    GenWordH word;
};

/// g = gA(a) * product(word), product(word) in HGamma_1(2).
Hgamma0Decomposition decompose_hgamma0(const EisMat4& g);

/// Coset index 1..4 of S X S^{-1} (S = diag(1, 1, 2, 2)) against the
/// half-integral translations r_i, or nullopt when none matches.
std::optional<int> phi9_coset_classify(const EisMat4& x);
const std::array<HermB, 4>& phi9_b();

std::string to_json_string(const EisMat4& g);
std::string to_json_string(const EisMat2& g);

} // namespace hk3
