#pragma once

#include <functional>
#include <string>
#include <vector>

#include "hk3/hermitian.hpp"
#include "hk3/lattice.hpp"
#include "hk3/period.hpp"

namespace hk3 {

/// The 6x6 matrix psi(A) with Psi(psi(A) z) = A Psi(z) A^*. Throws Error
/// unless det A is a unit.
OrthMatrix psi_hom(const EisMat2& a);

/// Generator of SO+(M)_0 with an integer exponent (h and h' carry a vector).
struct OToken {
    enum class Kind { h, hp, g1, g2, g1_conj, i42, minus_i42, u0u1, u2 };
    Kind kind;
    std::array<Integer, 4> m{};
    Integer power = 1;

    static OToken translation(const std::array<Integer, 4>& m) { return {Kind::h, m, 1}; }
    /// h'(m) = g0 h(m) g0
    static OToken dual_translation(const std::array<Integer, 4>& m) { return {Kind::hp, m, 1}; }
    static OToken make(Kind k, const Integer& p = 1) { return {k, {}, p}; }

    OrthMatrix matrix() const;
    OToken inverse() const;
    /// The Hermitian generator with the same action on H_2.
    HToken herm() const;
    std::string str() const;
};

using GenWordO = std::vector<OToken>;
OrthMatrix product(const GenWordO& w);

/// A composition of T, W and HGamma tokens, written left to right as
/// maps (the rightmost acts first).
struct HStep {
    enum class Kind { token, t, w };
    Kind kind;
    HToken token = HToken::make_a(EisMat2::identity());
};
using HermAction = std::vector<HStep>;
HermitianPoint apply_action(const HermAction& a, const HermitianPoint& tau);
HermAction as_action(const GenWordH& w);

struct DictionaryEntry {
    std::string name;
    OrthMatrix orth;
    HermAction herm;
};

/// Named generators and their Hermitian counterparts.
const std::vector<DictionaryEntry>& generator_table();

/// Psi(g z) == herm(Psi(z)) exactly; throws Error on chart escape.
bool equivariance_check(const OrthMatrix& g, const HermAction& herm, const PeriodPoint& z);
bool equivariance_check(const DictionaryEntry& entry, const PeriodPoint& z);

/// Word over h, h', g1, g2, u0 g1 u0, +-I42, u0 u1, u2 with product X.
GenWordO decompose_so0(const OrthMatrix& x);

struct HermImage {
    bool uses_t = false;
    bool uses_w = false;
    GenWordH word;
    GenWordO orth_word; // the SO+(M)_0 part, before translation

    /// T^t o W^w o word
    HermAction action() const;
};

/// g = u1^t (g0 u0 I42)^w X0 with X0 in SO+(M)_0, transported tokenwise.
HermImage orth_to_herm(const OrthMatrix& g);
/// Inverse transport; exact up to the sign -I6.
OrthMatrix herm_to_orth(const GenWordH& w, bool uses_t, bool uses_w);
/// The orthogonal image of a single Hermitian token.
OrthMatrix orth_of(const HToken& t);

} // namespace hk3
