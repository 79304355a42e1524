#pragma once

#include "hk3/hermitian.hpp"
#include "hk3/sampling.hpp"

namespace hk3::testing {

inline EisMat2 m2(Eis a, Eis b, Eis c, Eis d)
{
    EisMat2 r;
    r(0, 0) = a;
    r(0, 1) = b;
    r(1, 0) = c;
    r(1, 1) = d;
    return r;
}

} // namespace hk3::testing
