#pragma once

#include <array>
#include <string>
#include <vector>

#include "hk3/core.hpp"
#include "hk3/lattice.hpp"
#include "hk3/period.hpp"

namespace hk3 {

enum class Locus { node, eckardt, ns, km };

constexpr std::array<Locus, 4> all_loci{Locus::node, Locus::eckardt, Locus::ns, Locus::km};
std::string to_string(Locus l);

struct HeegnerFlags {
    bool node = false;
    bool eckardt = false;  // τ21 = −τ12
    bool ns = false;
    bool km = false;

    bool get(Locus l) const;
    friend bool operator==(const HeegnerFlags&, const HeegnerFlags&) = default;
};

/// Throws Error if tau is not in H2.
HeegnerFlags heegner_membership(const HermitianPoint& tau);

/// The lattice vector whose orthogonal hyperplane cuts out the locus.
IntVec6 heegner_vector(Locus l);

/// The chart condition on z: z2 = 1, z6 = 2z5, z6 = 0 or 2z6 = 1.
bool coordinate_condition(Locus l, const PeriodPoint& z);

struct PerpRecord {
    Locus locus;
    bool perp;
    bool coordinate;
    bool flag;

    bool consistent() const { return perp == coordinate && coordinate == flag; }
};

/// Throws Error if z is not in D_M^+.
std::array<PerpRecord, 4> perp_equivalence(const PeriodPoint& z);

struct ComplementCheck {
    Locus locus;
    std::vector<IntVec6> basis;
    std::vector<std::vector<Integer>> claimed_gram;
    std::vector<std::vector<Integer>> gram;
    bool orthogonal = false;
    bool gram_matches = false;
    Integer basis_det;
    Integer complement_det;
    bool index_one = false;

    bool ok() const { return orthogonal && gram_matches && index_one; }
};

std::vector<ComplementCheck> complement_gram_verify();

/// Exact random point of D_M^+ lying on the given locus.
PeriodPoint random_locus_point(Locus l, Rng& rng);

struct OrbitReport {
    int samples = 0;
    int transpose_ns = 0;  // T(τ) ∈ H_NS
    int shift_b1_ns = 0;
    int shift_b2_ns = 0;
    int shift_b3_km = 0;
    int shift_b4_transposed_km = 0;
    int km_pulls_back = 0;  // σ ∈ H_Km has σ − B3/2 ∈ H_NS

    bool ok() const
    {
        return transpose_ns == samples && shift_b1_ns == samples && shift_b2_ns == samples &&
               shift_b3_km == samples && shift_b4_transposed_km == samples &&
               km_pulls_back == samples;
    }
};

OrbitReport orbit_relation_check(int samples, Rng& rng);

/// τ ± B/2 for one of the four coset matrices B1..B4 (index 0..3).
HermitianPoint half_shift(const HermitianPoint& tau, int b_index, int sign = 1);

} // namespace hk3
