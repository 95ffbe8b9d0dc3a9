// Copyright 2026 The gamegraph Authors
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


// Walks through the weighted four-vertex game: zero-sum values for player 1,
// a Nash equilibrium built from the coalition games, and an equilibrium whose
// payoffs are pushed up to (3, 2).

#include <iostream>

#include "gg.hpp"

int main(int argc, char** argv) {
  const std::string path = argc > 1 ? argv[1] : "fixtures/fig2_weighted.json";
  auto file = gg::load_game(path);
  auto game = file.game();
  const auto& a = game.arena;
  const gg::Vertex v0 = a.vertex("v0");

  auto values = gg::coalition_values(game, 0);
  std::cout << "player 1 values:";
  for (gg::Vertex v = 0; v < a.num_vertices(); ++v) std::cout << ' ' << a.name(v) << '=' << gg::to_text(values.values[v]);
  std::cout << '\n';

  auto ne = gg::construct_ne(game, v0);
  std::cout << "equilibrium outcome " << gg::to_string(a, ne.outcome) << " payoffs (" << gg::to_text(ne.payoffs[0])
            << ", " << gg::to_text(ne.payoffs[1]) << ")\n";

  gg::Bounds high{{gg::Rational(3), gg::Rational(2)}, {}};
  if (auto w = gg::ne_constraint_decide(game, v0, high)) {
    std::cout << "with payoffs at least (3, 2): " << gg::to_string(a, w->outcome) << '\n';
    std::cout << gg::witness_to_json(a, *w).dump(2) << '\n';
  } else {
    std::cout << "no equilibrium reaches (3, 2)\n";
  }
}
