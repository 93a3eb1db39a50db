#pragma once

#include "moebius/algebra/interval.hpp"
#include "moebius/algebra/mpoly.hpp"
#include "moebius/algebra/poly.hpp"
#include "moebius/algebra/radical.hpp"
#include "moebius/algebra/scalar.hpp"
#include "moebius/algebra/sturm.hpp"
