#pragma once

#include "confact/core.hpp"
#include "confact/expm.hpp"
#include "confact/linalg.hpp"
#include "confact/euclid.hpp"
#include "confact/lorentz.hpp"
#include "confact/subalgebra.hpp"
#include "confact/reduction.hpp"
#include "confact/bridge.hpp"
#include "confact/catalog.hpp"
#include "confact/classifier.hpp"
#include "confact/orbit.hpp"
#include "confact/document.hpp"
#include "confact/random.hpp"
#include "confact/verify.hpp"
