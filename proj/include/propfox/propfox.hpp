#pragma once

#include "propfox/errors.hpp"
#include "propfox/rational.hpp"
#include "propfox/padic.hpp"
#include "propfox/laurent.hpp"
#include "propfox/matrix.hpp"
#include "propfox/word.hpp"
#include "propfox/presentation.hpp"
#include "propfox/representation.hpp"
#include "propfox/parallel.hpp"
#include "propfox/fox.hpp"
#include "propfox/fitting.hpp"
#include "propfox/zeros.hpp"
#include "propfox/extensions.hpp"
#include "propfox/cohomology.hpp"
