#pragma once

#include "nflab/canon.hpp"
#include "nflab/census.hpp"
#include "nflab/complex.hpp"
#include "nflab/dualize.hpp"
#include "nflab/families.hpp"
#include "nflab/orbit.hpp"
#include "nflab/vertex_set.hpp"
