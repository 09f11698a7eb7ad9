// Copyright 2026 The lapsep Authors
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

#ifndef LAPSEP_LAPSEP_HPP_
#define LAPSEP_LAPSEP_HPP_

#include "lapsep/classifier.hpp"
#include "lapsep/density.hpp"
#include "lapsep/entangler.hpp"
#include "lapsep/graph.hpp"
#include "lapsep/labeling.hpp"
#include "lapsep/pigeonhole.hpp"
#include "lapsep/pt_graph.hpp"
#include "lapsep/scan.hpp"

#endif  // LAPSEP_LAPSEP_HPP_
