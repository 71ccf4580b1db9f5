#pragma once

// Umbrella header.

#include "samatch/alignment.hpp"
#include "samatch/alignment_io.hpp"
#include "samatch/alignment_state.hpp"
#include "samatch/annealer.hpp"
#include "samatch/errors.hpp"
#include "samatch/evaluation.hpp"
#include "samatch/matcher.hpp"
#include "samatch/ontology.hpp"
#include "samatch/ontology_io.hpp"
#include "samatch/porter.hpp"
#include "samatch/similarity_matrix.hpp"
#include "samatch/soft_tfidf.hpp"
#include "samatch/string_metrics.hpp"
#include "samatch/structural.hpp"
#include "samatch/text_pipeline.hpp"
#include "samatch/wordnet.hpp"
#include "samatch/xml.hpp"
