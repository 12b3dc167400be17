// Copyright 2026 The triadic Authors
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

#include "triadic/attribution.hpp"
#include "triadic/dynamics.hpp"
#include "triadic/ingest.hpp"
#include "triadic/islands.hpp"
#include "triadic/metrics.hpp"
#include "triadic/model.hpp"
#include "triadic/oracle.hpp"
#include "triadic/pipeline.hpp"
#include "triadic/triads.hpp"
#include "triadic/tsv.hpp"
