// Copyright 2026 The speedplan Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "speedplan/curvature.hpp"
#include "speedplan/grid.hpp"
#include "speedplan/oracle.hpp"
#include "speedplan/problem.hpp"
#include "speedplan/problem_file.hpp"
#include "speedplan/result_io.hpp"
#include "speedplan/run.hpp"
#include "speedplan/sampled_function.hpp"
#include "speedplan/solver.hpp"
#include "speedplan/spline_path.hpp"
