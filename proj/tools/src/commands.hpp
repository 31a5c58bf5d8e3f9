// Copyright 2026 The bosonlaw Authors
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

#include <CLI11.hpp>

namespace bosonlaw::cli {

void add_amplitude(CLI::App& app);
void add_laws_bs(CLI::App& app);
void add_fig2(CLI::App& app);
void add_fig3(CLI::App& app);
void add_table1(CLI::App& app);
void add_table_b(CLI::App& app);
void add_classify(CLI::App& app);
void add_distinguishability(CLI::App& app);

}  // namespace bosonlaw::cli
