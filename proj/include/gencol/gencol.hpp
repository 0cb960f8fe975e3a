#pragma once

#include "gencol/error.hpp"
#include "gencol/formats.hpp"
#include "gencol/graph.hpp"
#include "gencol/graph_view.hpp"
#include "gencol/json_io.hpp"
#include "gencol/properties.hpp"
#include "gencol/ramsey.hpp"
#include "gencol/recognizer.hpp"
#include "gencol/reductions.hpp"
#include "gencol/sweep.hpp"
#include "gencol/vertex_set.hpp"
