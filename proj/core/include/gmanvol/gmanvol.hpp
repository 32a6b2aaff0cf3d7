#pragma once

#include "gmanvol/classify.hpp"
#include "gmanvol/coverings.hpp"
#include "gmanvol/error.hpp"
#include "gmanvol/graph.hpp"
#include "gmanvol/rational.hpp"
#include "gmanvol/seifert.hpp"
#include "gmanvol/slope.hpp"
#include "gmanvol/volume.hpp"
