#pragma once

#include "gtpoly/combinatorics.hpp"
#include "gtpoly/ehrhart.hpp"
#include "gtpoly/faces.hpp"
#include "gtpoly/family.hpp"
#include "gtpoly/linalg.hpp"
#include "gtpoly/oracle.hpp"
#include "gtpoly/pattern.hpp"
#include "gtpoly/rational.hpp"
#include "gtpoly/tiling.hpp"
