#pragma once

#include "explab/error.hpp"
#include "explab/rational.hpp"
#include "explab/fields.hpp"
#include "explab/graphs.hpp"
#include "explab/matrix.hpp"
#include "explab/spectral.hpp"
#include "explab/bounds.hpp"
#include "explab/parallel.hpp"
#include "explab/linear_code.hpp"
#include "explab/oracle.hpp"
#include "explab/codes.hpp"
#include "explab/corpus.hpp"
#include "explab/io.hpp"
