#ifndef RANKFORGE_RANKFORGE_HPP_
#define RANKFORGE_RANKFORGE_HPP_

#include "abelian.hpp"
#include "analyzer.hpp"
#include "automata.hpp"
#include "catalog.hpp"
#include "constructions.hpp"
#include "error.hpp"
#include "free_group.hpp"
#include "int_matrix.hpp"
#include "positive_kernel.hpp"
#include "regress.hpp"
#include "serialize.hpp"
#include "words.hpp"

#endif  // RANKFORGE_RANKFORGE_HPP_
