#pragma once

#include "necklace/counting.hpp"
#include "necklace/double_bracket.hpp"
#include "necklace/free_algebra.hpp"
#include "necklace/grammar.hpp"
#include "necklace/io.hpp"
#include "necklace/kontsevich.hpp"
#include "necklace/linear_necklace.hpp"
#include "necklace/low_degree.hpp"
#include "necklace/necklace_lie.hpp"
#include "necklace/poisson_poly.hpp"
#include "necklace/sampling.hpp"
#include "necklace/sl2_module.hpp"
#include "necklace/trace_calculus.hpp"
