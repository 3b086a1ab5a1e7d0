#pragma once

#include "braille/baseline.hpp"
#include "braille/cell.hpp"
#include "braille/code_table.hpp"
#include "braille/corrector.hpp"
#include "braille/corruption.hpp"
#include "braille/distance.hpp"
#include "braille/errors.hpp"
#include "braille/experiment.hpp"
#include "braille/image.hpp"
#include "braille/lexicon.hpp"
#include "braille/metrics.hpp"
#include "braille/morphology.hpp"
#include "braille/noise.hpp"
#include "braille/recognize.hpp"
#include "braille/render.hpp"
#include "braille/report.hpp"
#include "braille/rng.hpp"
#include "braille/segmentation.hpp"
#include "braille/text.hpp"
#include "braille/utf8.hpp"
