#include "doctest.h"
#include "stsrank/gf.hpp"
