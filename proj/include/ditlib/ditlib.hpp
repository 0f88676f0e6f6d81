// Copyright 2026 The ditlib Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "ditlib/approx.hpp"
#include "ditlib/ditbit.hpp"
#include "ditlib/dist.hpp"
#include "ditlib/errors.hpp"
#include "ditlib/formula.hpp"
#include "ditlib/joint.hpp"
#include "ditlib/measures.hpp"
#include "ditlib/pairset.hpp"
#include "ditlib/partition.hpp"
#include "ditlib/random.hpp"
#include "ditlib/relation.hpp"
#include "ditlib/sum.hpp"
#include "ditlib/universe.hpp"
