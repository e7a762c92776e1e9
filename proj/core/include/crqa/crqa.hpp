#pragma once

// Umbrella header.

#include "crqa/bench.hpp"
#include "crqa/categorical.hpp"
#include "crqa/embedding.hpp"
#include "crqa/io.hpp"
#include "crqa/measures.hpp"
#include "crqa/oracle.hpp"
#include "crqa/param_opt.hpp"
#include "crqa/profiles.hpp"
#include "crqa/render.hpp"
#include "crqa/report.hpp"
#include "crqa/runner.hpp"
#include "crqa/simulator.hpp"
#include "crqa/time_series.hpp"
