#pragma once

#include "operadlab/algebra_tools.hpp"
#include "operadlab/cohomology.hpp"
#include "operadlab/free_operad.hpp"
#include "operadlab/group_algebra.hpp"
#include "operadlab/hochschild.hpp"
#include "operadlab/matrix.hpp"
#include "operadlab/multilinear.hpp"
#include "operadlab/operad3.hpp"
#include "operadlab/permutation.hpp"
#include "operadlab/rational.hpp"
#include "operadlab/series.hpp"
#include "operadlab/structure_algebra.hpp"
#include "operadlab/trees.hpp"
#include "operadlab/verify.hpp"
