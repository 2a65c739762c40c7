#pragma once

// Umbrella header: the whole toolkit.

#include "treeskel/adjacency.hpp"
#include "treeskel/bounds.hpp"
#include "treeskel/char_vector.hpp"
#include "treeskel/clique.hpp"
#include "treeskel/degree_family.hpp"
#include "treeskel/edge_space.hpp"
#include "treeskel/enumeration.hpp"
#include "treeskel/errors.hpp"
#include "treeskel/families.hpp"
#include "treeskel/graph_instance.hpp"
#include "treeskel/hamiltonian.hpp"
#include "treeskel/hrep.hpp"
#include "treeskel/ip_model.hpp"
#include "treeskel/leaf_family.hpp"
#include "treeskel/lp.hpp"
#include "treeskel/rational.hpp"
#include "treeskel/skeleton.hpp"
#include "treeskel/solve.hpp"
#include "treeskel/spanning_tree.hpp"
#include "treeskel/verify.hpp"
