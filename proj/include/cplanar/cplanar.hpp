#pragma once

#include "assembly.hpp"
#include "bc_tree.hpp"
#include "c1p.hpp"
#include "clustered_graph.hpp"
#include "embedding.hpp"
#include "embedding_matrices.hpp"
#include "generator.hpp"
#include "io.hpp"
#include "labeling.hpp"
#include "oracle.hpp"
#include "partition.hpp"
#include "planarity.hpp"
#include "spqr.hpp"
