#pragma once

#include "motifkit/attribute.hpp"
#include "motifkit/canonical.hpp"
#include "motifkit/discovery.hpp"
#include "motifkit/engine.hpp"
#include "motifkit/graph.hpp"
#include "motifkit/graph_io.hpp"
#include "motifkit/motif.hpp"
#include "motifkit/rng.hpp"
#include "motifkit/stats.hpp"
#include "motifkit/xswap.hpp"
