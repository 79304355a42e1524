#pragma once

#include <array>

#include "hk3/core.hpp"
#include "hk3/lattice.hpp"
#include "hk3/tower.hpp"

namespace hk3 {

using TowerMat2 = Mat<Tower, 2, 2>;

/// Point of P(M (x) C), kept with first coordinate 1.
struct PeriodPoint {
    std::array<Tower, 6> z;

    /// Rescales so that z_1 = 1; throws Error("chart escape") if z_1 = 0.
    static PeriodPoint from_projective(const std::array<Tower, 6>& w);
    friend bool operator==(const PeriodPoint&, const PeriodPoint&) = default;
};

/// 2x2 complex matrix, a candidate point of H_2.
struct HermitianPoint {
    TowerMat2 tau;

    const Tower& operator()(std::size_t i, std::size_t j) const { return tau(i, j); }
    friend bool operator==(const HermitianPoint& x, const HermitianPoint& y)
    {
        return x.tau == y.tau;
    }
};

PeriodPoint dm_from_chart(const Tower& z3, const Tower& z4, const Tower& z5, const Tower& z6);

/// z^T Q w (bilinear, no conjugation).
Tower pair_q(const std::array<Tower, 6>& z, const std::array<Tower, 6>& w);
std::array<Tower, 6> conj(const std::array<Tower, 6>& z);

enum class Membership { plus, minus, none };

Membership dm_membership(const PeriodPoint& z);

/// Projective action; throws Error("chart escape") when the image has z_1 = 0.
PeriodPoint act(const OrthMatrix& g, const PeriodPoint& z);

bool in_h2(const TowerMat2& tau);
/// Imaginary part (tau - tau^*) / 2i.
TowerMat2 imaginary_part(const TowerMat2& tau);
TowerMat2 conj_transpose(const TowerMat2& m);
Tower det(const TowerMat2& m);
/// Throws InvariantViolation for a singular matrix.
TowerMat2 inverse(const TowerMat2& m);

HermitianPoint psi(const PeriodPoint& z);
PeriodPoint psi_inv(const HermitianPoint& tau);

/// Exact random point of D_M^+ with small rational entries.
PeriodPoint random_chart_point(Rng& rng);

std::string to_json_string(const PeriodPoint& z);

} // namespace hk3
