#pragma once

#include "hk3/correspondence.hpp"
#include "hk3/hermitian.hpp"

namespace hk3 {

/// Random generator of HGamma1(2): an even elementary gA, -1 on the first
/// coordinate, or a translation with entries in [-2, 2].
HToken random_hgamma1_token(Rng& rng);
GenWordH random_hgamma1_word(Rng& rng, int max_len);

/// Product of len random GL2(O) generators or their inverses.
EisMat2 random_gl2(Rng& rng, int len);
EisMat4 random_hgamma0(Rng& rng, int len);

OToken random_so0_token(Rng& rng);
GenWordO random_so0_word(Rng& rng, int max_len);

/// Random element of O+(M): optional u1 and g0 u0 I42 factors around an SO+(M)_0 word.
OrthMatrix random_o_plus(Rng& rng, int max_len);

} // namespace hk3
