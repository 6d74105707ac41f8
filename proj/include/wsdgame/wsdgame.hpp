// Copyright 2026 The wsdgame Authors.
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

#ifndef WSDGAME_WSDGAME_HPP_
#define WSDGAME_WSDGAME_HPP_

#include "wsdgame/contingency.hpp"
#include "wsdgame/counts.hpp"
#include "wsdgame/demos.hpp"
#include "wsdgame/dynamics.hpp"
#include "wsdgame/eval.hpp"
#include "wsdgame/graph.hpp"
#include "wsdgame/payoff.hpp"
#include "wsdgame/pipeline.hpp"
#include "wsdgame/senses.hpp"

#define WSDGAME_VERSION "0.1.0"

#endif  // WSDGAME_WSDGAME_HPP_
