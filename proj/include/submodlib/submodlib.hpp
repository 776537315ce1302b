// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


// Umbrella header for the library (everything except the command-line
// runner and the test oracle).

#ifndef SUBMODLIB_SUBMODLIB_HPP_
#define SUBMODLIB_SUBMODLIB_HPP_

#include "submodlib/clustering.hpp"
#include "submodlib/core.hpp"
#include "submodlib/functions/clustered.hpp"
#include "submodlib/functions/disparity.hpp"
#include "submodlib/functions/facility_location.hpp"
#include "submodlib/functions/feature_based.hpp"
#include "submodlib/functions/graph_cut.hpp"
#include "submodlib/functions/log_determinant.hpp"
#include "submodlib/functions/set_cover.hpp"
#include "submodlib/generic.hpp"
#include "submodlib/information/concave_over_modular.hpp"
#include "submodlib/information/context.hpp"
#include "submodlib/information/facility_location_info.hpp"
#include "submodlib/information/graph_cut_info.hpp"
#include "submodlib/information/log_det_info.hpp"
#include "submodlib/information/set_cover_info.hpp"
#include "submodlib/kernel.hpp"
#include "submodlib/linalg.hpp"
#include "submodlib/optimizers.hpp"

#endif  // SUBMODLIB_SUBMODLIB_HPP_
