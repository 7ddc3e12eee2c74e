#pragma once

#include "as2/characters.hpp"
#include "as2/error.hpp"
#include "as2/expr.hpp"
#include "as2/free_as2.hpp"
#include "as2/iso_bridge.hpp"
#include "as2/linalg.hpp"
#include "as2/lincomb.hpp"
#include "as2/rational.hpp"
#include "as2/report.hpp"
#include "as2/series.hpp"
#include "as2/tree.hpp"
#include "as2/tree_products.hpp"
#include "as2/verify.hpp"
