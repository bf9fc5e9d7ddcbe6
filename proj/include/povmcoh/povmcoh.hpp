// Copyright 2026 The povmcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef POVMCOH_POVMCOH_HPP
#define POVMCOH_POVMCOH_HPP

#include "povmcoh/linalg.hpp"
#include "povmcoh/povm.hpp"
#include "povmcoh/channels.hpp"
#include "povmcoh/monotones.hpp"
#include "povmcoh/robustness.hpp"
#include "povmcoh/tomography.hpp"
#include "povmcoh/experiment.hpp"
#include "povmcoh/builtins.hpp"

#endif // POVMCOH_POVMCOH_HPP
