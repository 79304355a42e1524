#pragma once

#include <array>
#include <string>
#include <vector>

#include "hk3/core.hpp"

namespace hk3 {

using IntMat6 = Mat<Integer, 6, 6>;
using IntVec6 = std::array<Integer, 6>;
/// A 6x6 integer matrix acting on M = Z^6 (columns are images of e_1..e_6).
using OrthMatrix = IntMat6;

/// Gram matrix of M = U + U(2) + A2(2).
const IntMat6& gram_q();

Integer pair_q(const IntVec6& x, const IntVec6& y);
IntVec6 mul_vec(const IntMat6& g, const IntVec6& x);
IntVec6 column(const IntMat6& g, std::size_t j);
Integer determinant(const IntMat6& g);

bool is_orthogonal(const OrthMatrix& g);
/// Q^{-1} g^T Q; throws Error for g outside O(M).
OrthMatrix orth_inverse(const OrthMatrix& g);
/// g^k for any integer k.
OrthMatrix orth_power(const OrthMatrix& g, const Integer& k);

enum class Orientation { plus, minus };

/// plus iff g maps the reference point [1 : 8 : 2i : 2i : 0 : 0] of D_M into
/// the component Im z_3 > 0. Throws Error for non-orthogonal g.
Orientation orientation(const OrthMatrix& g);

enum class BlockParity { diagonal, antidiagonal };

/// Upper-left 2x2 block mod 2: I (diagonal) or [[0,1],[1,0]] (antidiagonal).
BlockParity block_parity(const OrthMatrix& g);

/// The translation h(m1..m4) in O+(M): first column (1, a21, m1, m2, m3, m4),
/// a21 = -(1/2) m^T Q' m, row 2 tail -m^T Q'.
OrthMatrix translation_h(const std::array<Integer, 4>& m);

namespace named {
OrthMatrix g0();
OrthMatrix g1();
OrthMatrix g2();
OrthMatrix u0();
OrthMatrix u1();
OrthMatrix u2();
/// I_4 + (-I_2)
OrthMatrix i42();
OrthMatrix minus_i42();
} // namespace named

// --- discriminant group M^/M --------------------------------------------------

/// Coset x + Z^6 of the dual lattice, stored as 6x reduced into [0, 6).
struct DiscElement {
    std::array<int, 6> six{};

    static DiscElement from_scaled(const IntVec6& y); // x = y / 6
    std::array<Rational, 6> value() const;

    friend bool operator==(const DiscElement&, const DiscElement&) = default;
    friend DiscElement operator+(const DiscElement& x, const DiscElement& y);
    friend DiscElement operator-(const DiscElement& x);
    friend DiscElement operator*(int k, const DiscElement& x);
    bool is_zero() const;
    std::string str() const;
};

/// Generators d1 = e3/2, d2 = e4/2, d3 = e5/6 + e6/3, d4 = e5/3 + e6/6.
const std::array<DiscElement, 4>& disc_generators();
/// The isotropic 2-torsion classes v1..v5.
const std::array<DiscElement, 5>& disc_isotropic_2torsion();
/// All 48 elements, in a fixed order.
const std::vector<DiscElement>& disc_elements();
std::size_t disc_index(const DiscElement& x);

/// q_M(x) = x^T Q x reduced into [0, 2).
Rational disc_form_value(const DiscElement& x);
/// b(x, y) = x^T Q y reduced into [0, 1).
Rational disc_bilinear(const DiscElement& x, const DiscElement& y);

/// Automorphism of the discriminant group as a permutation of disc_elements().
struct DiscAutomorphism {
    std::array<std::uint8_t, 48> image{};

    DiscElement operator()(const DiscElement& x) const;
    static DiscAutomorphism identity();
    friend DiscAutomorphism operator*(const DiscAutomorphism& f, const DiscAutomorphism& g);
    friend bool operator==(const DiscAutomorphism&, const DiscAutomorphism&) = default;
    bool preserves_form() const;
};

DiscAutomorphism disc_action(const OrthMatrix& g);
DiscAutomorphism disc_inversion();

/// Permutation of {v1..v5}: perm[i] = j means the map sends v_{i+1} to v_{j+1}.
struct S5Perm {
    std::array<int, 5> perm{0, 1, 2, 3, 4};

    static S5Perm identity() { return {}; }
    /// Parses cycle notation such as "(14)(35)" or "()" (labels 1..5).
    static S5Perm from_cycles(const std::string& cycles);
    std::string cycles() const;
    bool is_even() const;
    /// (f * g)(i) = f(g(i))
    friend S5Perm operator*(const S5Perm& f, const S5Perm& g);
    friend bool operator==(const S5Perm&, const S5Perm&) = default;
};

/// Permutation of v1..v5 induced by an automorphism; throws InvariantViolation
/// if it does not permute them.
S5Perm action_on_isotropic(const DiscAutomorphism& f);
S5Perm to_s5(const OrthMatrix& g);

/// Congruence tests for O+_K3 and O+_Enr; both require g in O+(M).
bool is_in_k3(const OrthMatrix& g);
bool is_in_enr(const OrthMatrix& g);

struct DiscOrthogonalGroup {
    std::vector<DiscAutomorphism> elements;
    std::vector<S5Perm> action;
};

/// Brute force over images of d1..d4: every automorphism of M^/M preserving
/// q_M and its bilinear form.
DiscOrthogonalGroup enumerate_disc_orthogonal();

// --- sublattices --------------------------------------------------------------

struct Complement {
    std::vector<IntVec6> basis;
    std::vector<std::vector<Integer>> gram;
};

/// Integral basis of { x in M : x^T Q v = 0 } with its Gram matrix.
Complement orthogonal_complement(const IntVec6& v);

std::vector<std::vector<Integer>> gram_of(const std::vector<IntVec6>& basis);
Integer determinant(std::vector<std::vector<Integer>> m);

} // namespace hk3
