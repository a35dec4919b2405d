#pragma once

// Engine umbrella. File formats and the CLI live in io.hpp and cli.hpp.

#include "wbd/error.hpp"
#include "wbd/scalar.hpp"
#include "wbd/matrix.hpp"
#include "wbd/subspace.hpp"
#include "wbd/polynomial.hpp"
#include "wbd/algebra.hpp"
#include "wbd/baric.hpp"
#include "wbd/search.hpp"
#include "wbd/radical.hpp"
#include "wbd/peirce.hpp"
#include "wbd/lifting.hpp"
#include "wbd/structure.hpp"
#include "wbd/wedderburn.hpp"
#include "wbd/fixtures.hpp"
