// Copyright 2026 The Convexa Authors
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

#ifndef CONVEXA_CONVEXA_HPP_
#define CONVEXA_CONVEXA_HPP_

#include "convexa/backbones.hpp"
#include "convexa/centrality.hpp"
#include "convexa/coauthor.hpp"
#include "convexa/convexity.hpp"
#include "convexa/edge_list_io.hpp"
#include "convexa/error.hpp"
#include "convexa/graph.hpp"
#include "convexa/netstats.hpp"
#include "convexa/random.hpp"
#include "convexa/skeleton.hpp"
#include "convexa/synth.hpp"
#include "convexa/traversal.hpp"

#endif  // CONVEXA_CONVEXA_HPP_
