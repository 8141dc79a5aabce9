#pragma once

// Everything except the command line.
#include "oddhole/coloring.hpp"
#include "oddhole/common.hpp"
#include "oddhole/cuts.hpp"
#include "oddhole/decompose.hpp"
#include "oddhole/generators.hpp"
#include "oddhole/graph.hpp"
#include "oddhole/graph6.hpp"
#include "oddhole/holes.hpp"
#include "oddhole/jumps.hpp"
#include "oddhole/k4.hpp"
#include "oddhole/named_graphs.hpp"
#include "oddhole/rng.hpp"
#include "oddhole/serialize.hpp"
#include "oddhole/structures.hpp"
#include "oddhole/suites.hpp"
#include "oddhole/verify.hpp"
