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

#include <CLI11.hpp>
#include <exception>
#include <iostream>

#include "bosonlaw/errors.hpp"
#include "commands.hpp"
#include "io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"bosonlaw: Fock-state amplitudes and suppression laws on beamsplitters and tritters"};
  app.require_subcommand(1);
  bosonlaw::cli::add_amplitude(app);
  bosonlaw::cli::add_laws_bs(app);
  bosonlaw::cli::add_fig2(app);
  bosonlaw::cli::add_fig3(app);
  bosonlaw::cli::add_table1(app);
  bosonlaw::cli::add_table_b(app);
  bosonlaw::cli::add_classify(app);
  bosonlaw::cli::add_distinguishability(app);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const bosonlaw::cli::VerificationError& e) {
    std::cerr << "verification failed: " << e.what() << '\n';
    return 3;
  } catch (const bosonlaw::cli::OutputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
