#pragma once

#include "cotor/f2.hpp"
#include "cotor/category.hpp"
#include "cotor/nakayama.hpp"
#include "cotor/subcat.hpp"
#include "cotor/pairs.hpp"
#include "cotor/zi.hpp"
#include "cotor/mutation.hpp"
#include "cotor/polygon.hpp"
#include "cotor/match.hpp"
#include "cotor/suites.hpp"

namespace cotor {
inline constexpr const char* version = "0.1.0";
}
