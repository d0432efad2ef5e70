#pragma once

#include "khall/error.hpp"
#include "khall/hypergraph.hpp"
#include "khall/bipartite.hpp"
#include "khall/matching.hpp"
#include "khall/exact.hpp"
#include "khall/random.hpp"
#include "khall/io.hpp"
#include "khall/generate.hpp"
#include "khall/report.hpp"
#include "khall/campaign.hpp"
