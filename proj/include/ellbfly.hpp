// Copyright 2026 The ellbfly Authors.
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

#include "ellbfly/basis.hpp"
#include "ellbfly/butterfly.hpp"
#include "ellbfly/curve.hpp"
#include "ellbfly/error.hpp"
#include "ellbfly/field.hpp"
#include "ellbfly/goppa.hpp"
#include "ellbfly/level.hpp"
#include "ellbfly/linalg.hpp"
#include "ellbfly/lwe.hpp"
#include "ellbfly/normal_basis.hpp"
#include "ellbfly/ntt.hpp"
#include "ellbfly/ops.hpp"
#include "ellbfly/ring.hpp"
#include "ellbfly/search.hpp"
#include "ellbfly/tower.hpp"
#include "ellbfly/tower_io.hpp"
