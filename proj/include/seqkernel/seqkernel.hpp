#pragma once

/// Umbrella header for the whole library.

#include "seqkernel/cli.hpp"
#include "seqkernel/combinatorics.hpp"
#include "seqkernel/errors.hpp"
#include "seqkernel/ltt.hpp"
#include "seqkernel/numeric.hpp"
#include "seqkernel/partitions.hpp"
#include "seqkernel/ramanujan.hpp"
#include "seqkernel/series.hpp"
#include "seqkernel/series_pow.hpp"
#include "seqkernel/special.hpp"
