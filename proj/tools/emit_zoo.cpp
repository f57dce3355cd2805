// Writes every zoo theory as a theory file into the given directory.
#include <filesystem>
#include <fstream>
#include <iostream>

#include "specdens/theory_io.hpp"
#include "specdens/zoo.hpp"

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: emit_zoo <dir>\n";
    return 1;
  }
  std::filesystem::path dir(argv[1]);
  std::filesystem::create_directories(dir);
  for (const auto& e : specdens::build_zoo()) {
    std::ofstream f(dir / (e.key + ".json"));
    f << specdens::theory_to_json(e.theory, e.axioms);
    if (!f) {
      std::cerr << "cannot write " << e.key << "\n";
      return 1;
    }
  }
  return 0;
}
