#pragma once

// Umbrella header: the whole library in one include.

#include "treelike/analysis.hpp"
#include "treelike/closed_forms.hpp"
#include "treelike/enumerate.hpp"
#include "treelike/exact.hpp"
#include "treelike/growth.hpp"
#include "treelike/parallel.hpp"
#include "treelike/random_walk.hpp"
#include "treelike/tree.hpp"
#include "treelike/verify.hpp"
