#pragma once

#include "mipkit/algebra.hpp"
#include "mipkit/canonical.hpp"
#include "mipkit/catalog.hpp"
#include "mipkit/decomposition.hpp"
#include "mipkit/error.hpp"
#include "mipkit/fingerprint.hpp"
#include "mipkit/fp_linalg.hpp"
#include "mipkit/group.hpp"
#include "mipkit/iso_search.hpp"
#include "mipkit/power_maps.hpp"
#include "mipkit/presentation.hpp"
