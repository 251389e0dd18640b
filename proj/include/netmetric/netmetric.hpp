#pragma once

#include "netmetric/approx.hpp"
#include "netmetric/barycentric.hpp"
#include "netmetric/error.hpp"
#include "netmetric/exact.hpp"
#include "netmetric/experiment.hpp"
#include "netmetric/gen.hpp"
#include "netmetric/interior.hpp"
#include "netmetric/io.hpp"
#include "netmetric/local_search.hpp"
#include "netmetric/matrix.hpp"
#include "netmetric/mds.hpp"
#include "netmetric/network.hpp"
#include "netmetric/parallel.hpp"
#include "netmetric/rng.hpp"
#include "netmetric/transport.hpp"
