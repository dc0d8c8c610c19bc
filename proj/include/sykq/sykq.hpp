// Copyright 2026 The sykq Authors
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

#include "sykq/bessel.hpp"
#include "sykq/bits.hpp"
#include "sykq/dense.hpp"
#include "sykq/evolution.hpp"
#include "sykq/gate.hpp"
#include "sykq/oracles.hpp"
#include "sykq/pauli_string.hpp"
#include "sykq/program.hpp"
#include "sykq/resources.hpp"
#include "sykq/rng.hpp"
#include "sykq/state_vector.hpp"
#include "sykq/stats.hpp"
#include "sykq/syk_model.hpp"
#include "sykq/walk.hpp"
