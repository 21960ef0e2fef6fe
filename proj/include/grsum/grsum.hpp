#pragma once

#include "grsum/clusters.hpp"
#include "grsum/corpus_io.hpp"
#include "grsum/dep_tree.hpp"
#include "grsum/error.hpp"
#include "grsum/pipeline.hpp"
#include "grsum/porter_stemmer.hpp"
#include "grsum/rankers.hpp"
#include "grsum/report.hpp"
#include "grsum/rouge.hpp"
#include "grsum/sentence_graph.hpp"
#include "grsum/similarity.hpp"
#include "grsum/stopwords.hpp"
#include "grsum/text_pipeline.hpp"
