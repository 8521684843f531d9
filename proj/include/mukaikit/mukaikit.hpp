#pragma once

#include "mukaikit/rational.hpp"
#include "mukaikit/linalg.hpp"
#include "mukaikit/cohomology.hpp"
#include "mukaikit/flag.hpp"
#include "mukaikit/char_classes.hpp"
#include "mukaikit/pairings.hpp"
#include "mukaikit/moduli.hpp"
#include "mukaikit/degeneration.hpp"
#include "mukaikit/schubert.hpp"
