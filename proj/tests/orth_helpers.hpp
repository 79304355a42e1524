#pragma once

#include "hk3/correspondence.hpp"
#include "hk3/sampling.hpp"
