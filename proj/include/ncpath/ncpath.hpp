#pragma once

#include "ncpath/graph.hpp"
#include "ncpath/blocks.hpp"
#include "ncpath/lexbfs.hpp"
#include "ncpath/chordal.hpp"
#include "ncpath/witness.hpp"
#include "ncpath/nc_model.hpp"
#include "ncpath/recognition.hpp"
#include "ncpath/domination.hpp"
#include "ncpath/hamiltonicity.hpp"
#include "ncpath/io.hpp"
#include "ncpath/bench.hpp"
