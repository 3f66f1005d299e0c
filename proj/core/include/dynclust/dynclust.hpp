#pragma once

#include "dynclust/changes.hpp"
#include "dynclust/dynamic.hpp"
#include "dynclust/errors.hpp"
#include "dynclust/experiment.hpp"
#include "dynclust/generator.hpp"
#include "dynclust/graph.hpp"
#include "dynclust/louvain.hpp"
#include "dynclust/objectives.hpp"
#include "dynclust/partition.hpp"
#include "dynclust/random.hpp"
#include "dynclust/stream_io.hpp"
