#include <CLI11.hpp>
#include <iostream>

#include "shipped_corpus.hpp"

using namespace normgraph;

int main(int argc, char** argv) {
  CLI::App app{"Writes the shipped corpus files and golden results"};
  std::string dir = "corpus";
  app.add_option("dir", dir);
  CLI11_PARSE(app, argc, argv);
  try {
    for (const auto& f : shipped::files()) io::save(f.realization, dir + "/" + f.name + ".json");
    for (const auto& p : shipped::prior_files()) io::write_text(dir + "/" + p.name + ".json", p.weights.dump(2) + "\n");
    io::write_text(dir + "/golden.json", shipped::golden().dump(2) + "\n");
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 4;
  }
  return 0;
}
