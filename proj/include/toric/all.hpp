#pragma once

#include "toric/buchberger.hpp"
#include "toric/config.hpp"
#include "toric/error.hpp"
#include "toric/exactmath.hpp"
#include "toric/fan.hpp"
#include "toric/generators.hpp"
#include "toric/io.hpp"
#include "toric/ip.hpp"
#include "toric/monomial.hpp"
#include "toric/orders.hpp"
#include "toric/simplex.hpp"
#include "toric/toric.hpp"
#include "toric/vector.hpp"
