#pragma once

// Umbrella header.

#include "permsort/errors.hpp"
#include "permsort/permutation.hpp"
#include "permsort/pattern.hpp"
#include "permsort/matching.hpp"
#include "permsort/enumeration.hpp"
#include "permsort/oracle.hpp"
#include "permsort/preimage.hpp"
#include "permsort/fixtures.hpp"
#include "permsort/format.hpp"
