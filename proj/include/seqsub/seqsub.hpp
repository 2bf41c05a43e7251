// Copyright 2026 The Authors.
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

// Convenience umbrella for the whole library.

#ifndef SEQSUB_SEQSUB_HPP_
#define SEQSUB_SEQSUB_HPP_

#include "seqsub/algorithms.hpp"
#include "seqsub/bounds.hpp"
#include "seqsub/certify.hpp"
#include "seqsub/core.hpp"
#include "seqsub/error.hpp"
#include "seqsub/functions.hpp"
#include "seqsub/instance_io.hpp"
#include "seqsub/oracles.hpp"
#include "seqsub/properties.hpp"

#endif  // SEQSUB_SEQSUB_HPP_
