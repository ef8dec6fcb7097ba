#pragma once

#include "fermatq/action.hpp"
#include "fermatq/canonical_map.hpp"
#include "fermatq/classify.hpp"
#include "fermatq/error.hpp"
#include "fermatq/linear_system.hpp"
#include "fermatq/modp.hpp"
#include "fermatq/resolution.hpp"
#include "fermatq/tables.hpp"
