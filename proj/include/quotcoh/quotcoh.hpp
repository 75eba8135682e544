#pragma once

#include "quotcoh/blowup.hpp"
#include "quotcoh/graded_ring.hpp"
#include "quotcoh/groebner.hpp"
#include "quotcoh/kirwan.hpp"
#include "quotcoh/multipoly.hpp"
#include "quotcoh/pipeline.hpp"
#include "quotcoh/rational.hpp"
#include "quotcoh/series.hpp"
