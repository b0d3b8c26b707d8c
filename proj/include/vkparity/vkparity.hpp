#pragma once

#include "vkparity/errors.hpp"
#include "vkparity/gauss_diagram.hpp"
#include "vkparity/parity.hpp"
#include "vkparity/invariants.hpp"
#include "vkparity/triangle_templates.hpp"
#include "vkparity/moves.hpp"
#include "vkparity/flat.hpp"
#include "vkparity/formal_sum.hpp"
#include "vkparity/vassiliev.hpp"
