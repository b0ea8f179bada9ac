// Copyright 2026 The anyonint Authors
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

// Writes the built-in models as model files (maintenance tool; the shipped
// files under models/ are generated with this).

#include <fstream>
#include <iostream>

#include "anyonint/model.hpp"
#include "anyonint/model_io.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: anyonint-export-models <output-dir>\n";
    return 2;
  }
  const std::string dir = argv[1];
  for (const std::string& name : anyonint::builtin_model_names()) {
    const std::string path = dir + "/" + name + ".json";
    std::ofstream out(path, std::ios::binary);
    if (!out) {
      std::cerr << "cannot write " << path << "\n";
      return 1;
    }
    out << anyonint::serialize_model(*anyonint::builtin_model(name));
    std::cout << "wrote " << path << "\n";
  }
  return 0;
}
