#pragma once

#include "isoword/border.hpp"
#include "isoword/cube_oracle.hpp"
#include "isoword/distance.hpp"
#include "isoword/error.hpp"
#include "isoword/isometry.hpp"
#include "isoword/lce_index.hpp"
#include "isoword/word.hpp"
