// Umbrella header.
#pragma once

#include "balldir/approximant.hpp"
#include "balldir/cauchy.hpp"
#include "balldir/dd.hpp"
#include "balldir/energy.hpp"
#include "balldir/errors.hpp"
#include "balldir/factorials.hpp"
#include "balldir/frankwolfe.hpp"
#include "balldir/linalg.hpp"
#include "balldir/maps.hpp"
#include "balldir/measures.hpp"
#include "balldir/poly.hpp"
#include "balldir/weights.hpp"
#include "balldir/zeroset.hpp"
