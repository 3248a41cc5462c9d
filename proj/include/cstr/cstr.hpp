#pragma once

// Umbrella header for the closest-string toolkit.

#include "cstr/alphabet.hpp"
#include "cstr/bench.hpp"
#include "cstr/congestion.hpp"
#include "cstr/cost_model.hpp"
#include "cstr/cost_scheme.hpp"
#include "cstr/cssp.hpp"
#include "cstr/distance.hpp"
#include "cstr/dp_levenshtein.hpp"
#include "cstr/exhaustive.hpp"
#include "cstr/fasta.hpp"
#include "cstr/grover.hpp"
#include "cstr/instance.hpp"
#include "cstr/io.hpp"
#include "cstr/preprocess.hpp"
#include "cstr/rational.hpp"
#include "cstr/rng.hpp"
#include "cstr/spectral.hpp"
#include "cstr/tree_chain.hpp"
#include "cstr/tree_search.hpp"
#include "cstr/walk_search.hpp"
