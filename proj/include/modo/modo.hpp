#pragma once
// Everything except the brute-force oracles (modo/oracle.hpp).

#include "cperm.hpp"
#include "graph.hpp"
#include "generate.hpp"
#include "io.hpp"
#include "mdecomp.hpp"
#include "orient.hpp"
#include "outcome.hpp"
#include "perm.hpp"
#include "pqtree.hpp"
#include "reductions.hpp"
#include "simorient.hpp"
#include "twosat.hpp"
