// Copyright 2026 The qdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDIST_QDIST_HPP
#define QDIST_QDIST_HPP

#include "qdist/catalog.hpp"
#include "qdist/errors.hpp"
#include "qdist/extended_real.hpp"
#include "qdist/families.hpp"
#include "qdist/golden_section.hpp"
#include "qdist/hot.hpp"
#include "qdist/matrix_io.hpp"
#include "qdist/measures.hpp"
#include "qdist/random_states.hpp"
#include "qdist/spectral.hpp"
#include "qdist/state.hpp"
#include "qdist/sweep.hpp"

#endif  // QDIST_QDIST_HPP
