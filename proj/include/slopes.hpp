// Copyright 2026 The slopes Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS-IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include "slopes/scalar.hpp"
#include "slopes/error.hpp"
#include "slopes/geometry.hpp"
#include "slopes/slopes.hpp"
#include "slopes/conic.hpp"
#include "slopes/regularity.hpp"
#include "slopes/generators.hpp"
#include "slopes/verifier.hpp"
#include "slopes/io.hpp"
#include "slopes/svg.hpp"
