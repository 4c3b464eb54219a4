#pragma once

// Umbrella header for the tileguard library.

#include "tileguard/corpus.hpp"
#include "tileguard/error.hpp"
#include "tileguard/ir_filter.hpp"
#include "tileguard/lexer.hpp"
#include "tileguard/matchers.hpp"
#include "tileguard/metrics.hpp"
#include "tileguard/parallel.hpp"
#include "tileguard/pipeline.hpp"
#include "tileguard/seed_programs.hpp"
#include "tileguard/thresholds.hpp"
#include "tileguard/token.hpp"
#include "tileguard/variants.hpp"
