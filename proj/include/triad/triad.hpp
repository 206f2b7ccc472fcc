// Copyright 2026 The Triad Authors
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


#pragma once

#include "triad/assignment.hpp"
#include "triad/bench.hpp"
#include "triad/common.hpp"
#include "triad/edge_list.hpp"
#include "triad/edge_stream.hpp"
#include "triad/generators.hpp"
#include "triad/graph.hpp"
#include "triad/ideal_estimator.hpp"
#include "triad/main_estimator.hpp"
#include "triad/random.hpp"
#include "triad/report.hpp"
#include "triad/sampling.hpp"
#include "triad/stats.hpp"
