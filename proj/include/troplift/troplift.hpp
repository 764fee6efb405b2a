// Umbrella header.
#pragma once

#include "troplift/cli.hpp"
#include "troplift/fan.hpp"
#include "troplift/hypersurface.hpp"
#include "troplift/intersect.hpp"
#include "troplift/io.hpp"
#include "troplift/lattice.hpp"
#include "troplift/obstruct.hpp"
#include "troplift/oracle.hpp"
#include "troplift/polygon.hpp"
#include "troplift/polytope3.hpp"
#include "troplift/subdivision.hpp"
