#pragma once

#include "hypersum/poly.hpp"
#include "hypersum/hyp_sums.hpp"
#include "hypersum/diff_ops.hpp"
#include "hypersum/sobolev.hpp"
#include "hypersum/roots.hpp"
#include "hypersum/pfq.hpp"
#include "hypersum/ri_pencils.hpp"
#include "hypersum/random.hpp"
#include "hypersum/verify.hpp"
#include "hypersum/io.hpp"
