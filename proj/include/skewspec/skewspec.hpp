#pragma once

#include "skewspec/eigen.hpp"
#include "skewspec/energy.hpp"
#include "skewspec/errors.hpp"
#include "skewspec/graph.hpp"
#include "skewspec/io.hpp"
#include "skewspec/matrix.hpp"
#include "skewspec/maxenergy.hpp"
#include "skewspec/products.hpp"
#include "skewspec/search.hpp"
