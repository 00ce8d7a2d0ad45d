#pragma once

#include "idcode/bitset.hpp"
#include "idcode/codes.hpp"
#include "idcode/constructions.hpp"
#include "idcode/errors.hpp"
#include "idcode/graph.hpp"
#include "idcode/interval.hpp"
#include "idcode/interval_approx.hpp"
#include "idcode/io.hpp"
#include "idcode/lp.hpp"
#include "idcode/rational.hpp"
#include "idcode/reductions.hpp"
#include "idcode/setcover.hpp"
#include "idcode/vc.hpp"
