#pragma once

// Umbrella header: exact arithmetic for block-pair elements of the
// Brin-Thompson groups nV and their finitely twisted variants.

#include "element.hpp"
#include "errors.hpp"
#include "growth.hpp"
#include "io.hpp"
#include "pattern.hpp"
#include "perm.hpp"
#include "point.hpp"
#include "random_element.hpp"
#include "rng.hpp"
#include "segments.hpp"
#include "svg.hpp"
#include "torsion.hpp"
#include "word.hpp"
