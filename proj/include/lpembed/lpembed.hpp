#pragma once

#include "lpembed/error.hpp"
#include "lpembed/rational.hpp"
#include "lpembed/kscalar.hpp"
#include "lpembed/forms.hpp"
#include "lpembed/linalg.hpp"
#include "lpembed/phi.hpp"
#include "lpembed/frames.hpp"
#include "lpembed/frame_io.hpp"
