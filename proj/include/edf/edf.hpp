// Umbrella header.

#pragma once

#include "edf/constructions.hpp"
#include "edf/diffcore.hpp"
#include "edf/feasibility.hpp"
#include "edf/field.hpp"
#include "edf/group.hpp"
#include "edf/io.hpp"
#include "edf/numtheory.hpp"
#include "edf/search.hpp"
