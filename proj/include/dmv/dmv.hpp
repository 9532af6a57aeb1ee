#ifndef DMV_DMV_HPP
#define DMV_DMV_HPP

#include "dmv/algebra.hpp"
#include "dmv/decision.hpp"
#include "dmv/duality.hpp"
#include "dmv/eval.hpp"
#include "dmv/formula.hpp"
#include "dmv/io.hpp"
#include "dmv/parse.hpp"
#include "dmv/polyhedron.hpp"
#include "dmv/polytope.hpp"
#include "dmv/pwl.hpp"
#include "dmv/qmap.hpp"
#include "dmv/rational.hpp"
#include "dmv/translate.hpp"

#endif
