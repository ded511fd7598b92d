#pragma once

#include "poac/codec.hpp"
#include "poac/error.hpp"
#include "poac/huffman.hpp"
#include "poac/image.hpp"
#include "poac/metrics.hpp"
#include "poac/noise.hpp"
#include "poac/pgm.hpp"
#include "poac/pipeline.hpp"
#include "poac/projection.hpp"
#include "poac/shrinkage.hpp"
#include "poac/wavelet.hpp"
