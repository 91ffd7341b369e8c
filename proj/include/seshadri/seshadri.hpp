#pragma once

#include "seshadri/rational.hpp"
#include "seshadri/radical.hpp"
#include "seshadri/lattice.hpp"
#include "seshadri/multiplicity.hpp"
#include "seshadri/surface.hpp"
#include "seshadri/bounds.hpp"
#include "seshadri/classifier.hpp"
#include "seshadri/json_io.hpp"
