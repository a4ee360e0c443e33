#pragma once

#include "avoidable/core.hpp"
#include "avoidable/graph.hpp"
#include "avoidable/walk.hpp"
#include "avoidable/dfs.hpp"
#include "avoidable/avoidability.hpp"
#include "avoidable/shifting.hpp"
#include "avoidable/families.hpp"
#include "avoidable/corpus.hpp"
#include "avoidable/io.hpp"
#include "avoidable/report.hpp"
#include "avoidable/suite.hpp"
