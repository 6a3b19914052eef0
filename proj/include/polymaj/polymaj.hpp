#pragma once

#include "polymaj/error.hpp"
#include "polymaj/harness.hpp"
#include "polymaj/homotopy.hpp"
#include "polymaj/interlace.hpp"
#include "polymaj/interval.hpp"
#include "polymaj/majorize.hpp"
#include "polymaj/poly.hpp"
#include "polymaj/rational.hpp"
#include "polymaj/residue.hpp"
#include "polymaj/root_isolation.hpp"
