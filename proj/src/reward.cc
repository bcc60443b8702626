// Copyright 2026 The Hearts Arena Authors
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

#include "hearts/reward.h"

namespace hearts {

std::shared_ptr<const RewardShaper> MakeShaper(const std::string& name,
                                               double illegal_penalty) {
  if (name == "default") {
    return std::make_shared<DefaultShaper>(illegal_penalty);
  }
  if (name == "terminal_only") {
    return std::make_shared<TerminalScoreShaper>(illegal_penalty);
  }
  return nullptr;
}

}  // namespace hearts
