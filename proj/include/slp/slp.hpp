/*
 * Copyright 2026 The slp Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "slp/classical.hpp"
#include "slp/definability.hpp"
#include "slp/error.hpp"
#include "slp/evaluate.hpp"
#include "slp/format.hpp"
#include "slp/model.hpp"
#include "slp/parser.hpp"
#include "slp/prop.hpp"
#include "slp/syntax.hpp"
#include "slp/truth.hpp"
