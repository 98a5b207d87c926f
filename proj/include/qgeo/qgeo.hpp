// Copyright 2026 The qgeo Authors.

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Umbrella header: the whole qgeo library (states, metric, geodesics,
 * optimal-speed evolution, geodesicity verification).  File I/O lives in
 * qgeo/io.hpp and is not pulled in here, so library users without the
 * vendored JSON dependency can include this header alone.
 */

#pragma once

#include "qgeo/error.hpp"
#include "qgeo/evolve.hpp"
#include "qgeo/geodesic.hpp"
#include "qgeo/metric.hpp"
#include "qgeo/state.hpp"
#include "qgeo/verify.hpp"
