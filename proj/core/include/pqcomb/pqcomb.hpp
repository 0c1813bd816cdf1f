#pragma once

#include "pqcomb/bellgraph.hpp"
#include "pqcomb/deformation.hpp"
#include "pqcomb/errors.hpp"
#include "pqcomb/identities.hpp"
#include "pqcomb/moments.hpp"
#include "pqcomb/poly.hpp"
#include "pqcomb/report.hpp"
#include "pqcomb/scalar.hpp"
#include "pqcomb/stirling.hpp"
