#pragma once

#include "hopfcomb/axioms.hpp"
#include "hopfcomb/basis.hpp"
#include "hopfcomb/binary_tree.hpp"
#include "hopfcomb/congruence.hpp"
#include "hopfcomb/dual.hpp"
#include "hopfcomb/error.hpp"
#include "hopfcomb/lincomb.hpp"
#include "hopfcomb/numeric.hpp"
#include "hopfcomb/quotient.hpp"
#include "hopfcomb/realization.hpp"
#include "hopfcomb/series.hpp"
#include "hopfcomb/trees.hpp"
#include "hopfcomb/word.hpp"
