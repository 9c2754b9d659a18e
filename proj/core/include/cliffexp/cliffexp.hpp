#pragma once

#include "cliffexp/algebra.hpp"
#include "cliffexp/errors.hpp"
#include "cliffexp/exp.hpp"
#include "cliffexp/functions.hpp"
#include "cliffexp/multivector.hpp"
#include "cliffexp/remap.hpp"
#include "cliffexp/series.hpp"
#include "cliffexp/signature.hpp"
#include "cliffexp/spin.hpp"
