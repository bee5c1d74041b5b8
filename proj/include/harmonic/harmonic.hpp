#pragma once

#include "harmonic/rational.hpp"
#include "harmonic/graph.hpp"
#include "harmonic/edge_list.hpp"
#include "harmonic/families.hpp"
#include "harmonic/distance.hpp"
#include "harmonic/centrality.hpp"
#include "harmonic/closed_form.hpp"
#include "harmonic/verify.hpp"
