#ifndef BERGE_BERGE_HPP
#define BERGE_BERGE_HPP

#include "berge/config.hpp"
#include "berge/csv.hpp"
#include "berge/errors.hpp"
#include "berge/evolver.hpp"
#include "berge/expr.hpp"
#include "berge/game.hpp"
#include "berge/oracle.hpp"
#include "berge/regions.hpp"
#include "berge/relation.hpp"
#include "berge/rng.hpp"
#include "berge/run_record.hpp"
#include "berge/text.hpp"
#include "berge/version.hpp"

#endif  // BERGE_BERGE_HPP
