// Copyright 2026 The qcc Authors
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


#include <cmath>
#include <cstdio>

#include "qcc/channel.hpp"
#include "qcc/conjugate.hpp"

int main() {
  const qcc::KrausChannel conj = qcc::conjugate_kraus(qcc::completely_noisy_channel(2));
  const bool ok = conj.d_out() == 4 && conj.size() == 2;
  std::printf("%s\n", ok ? "ok" : "unexpected conjugate shape");
  return ok ? 0 : 1;
}
