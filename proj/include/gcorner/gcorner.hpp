#pragma once

#include "gcorner/corner.hpp"
#include "gcorner/error.hpp"
#include "gcorner/group.hpp"
#include "gcorner/group_label.hpp"
#include "gcorner/invariants.hpp"
#include "gcorner/iso.hpp"
#include "gcorner/multigraph.hpp"
#include "gcorner/smith.hpp"
#include "gcorner/subtree.hpp"
