#ifndef CRSEQ_CRSEQ_HPP
#define CRSEQ_CRSEQ_HPP

#include "analysis.hpp"
#include "bits.hpp"
#include "enumerate.hpp"
#include "graph.hpp"
#include "io.hpp"
#include "pcr.hpp"
#include "successor.hpp"

#endif
