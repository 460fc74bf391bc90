// Copyright 2026 The cfkit Authors
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

// Umbrella header for the whole library.

#pragma once

#include "cfkit/cf_relations.hpp"
#include "cfkit/cf_space.hpp"
#include "cfkit/dot.hpp"
#include "cfkit/error.hpp"
#include "cfkit/generate.hpp"
#include "cfkit/guard.hpp"
#include "cfkit/json_io.hpp"
#include "cfkit/poset.hpp"
#include "cfkit/representation.hpp"
#include "cfkit/rough.hpp"
#include "cfkit/subset.hpp"
#include "cfkit/workbench.hpp"
