//  Copyright 2026 The orderkit Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include "orderkit/antichains.hpp"
#include "orderkit/bipartite.hpp"
#include "orderkit/common.hpp"
#include "orderkit/density.hpp"
#include "orderkit/enumerate.hpp"
#include "orderkit/extremal.hpp"
#include "orderkit/family.hpp"
#include "orderkit/graph_density.hpp"
#include "orderkit/io.hpp"
#include "orderkit/lattice.hpp"
#include "orderkit/matching.hpp"
#include "orderkit/poset.hpp"
#include "orderkit/subdirect.hpp"
