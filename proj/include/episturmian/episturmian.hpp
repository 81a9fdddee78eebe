#pragma once

#include "classify.hpp"
#include "core.hpp"
#include "normalize.hpp"
#include "oracle.hpp"
#include "quasiperiod.hpp"
#include "text.hpp"
#include "verify.hpp"
