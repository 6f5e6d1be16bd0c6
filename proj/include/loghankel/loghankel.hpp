#pragma once

#include "loghankel/bounds.hpp"
#include "loghankel/caratheodory.hpp"
#include "loghankel/classes.hpp"
#include "loghankel/error.hpp"
#include "loghankel/function_classes.hpp"
#include "loghankel/disk_max.hpp"
#include "loghankel/log_functionals.hpp"
#include "loghankel/series.hpp"
#include "loghankel/verifier.hpp"
