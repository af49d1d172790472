#pragma once

#include "latder/bitset.hpp"
#include "latder/bounded.hpp"
#include "latder/congruence.hpp"
#include "latder/cover_poset.hpp"
#include "latder/derived.hpp"
#include "latder/errors.hpp"
#include "latder/generators.hpp"
#include "latder/io.hpp"
#include "latder/isomorphism.hpp"
#include "latder/lattice.hpp"
#include "latder/newman.hpp"
#include "latder/poset.hpp"
#include "latder/semidistributive.hpp"
