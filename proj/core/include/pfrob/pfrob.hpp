#pragma once

#include "pfrob/cone.hpp"
#include "pfrob/error.hpp"
#include "pfrob/factorization.hpp"
#include "pfrob/frobenius.hpp"
#include "pfrob/frobenius_result.hpp"
#include "pfrob/gluing.hpp"
#include "pfrob/groebner.hpp"
#include "pfrob/oracle.hpp"
#include "pfrob/order.hpp"
#include "pfrob/semigroup.hpp"
#include "pfrob/vec.hpp"
