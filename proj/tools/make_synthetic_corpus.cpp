// Writes the generated two-author fixture corpus as <author>.json files.
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "stylo/corpus.hpp"
#include "stylo/synthetic.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Generate the synthetic two-author corpus"};
  std::string out_dir = "data/synthetic";
  std::size_t comments = 600;
  std::uint64_t seed = 7;
  app.add_option("--out", out_dir, "Output directory")->capture_default_str();
  app.add_option("--comments", comments, "Comments per author")->capture_default_str();
  app.add_option("--seed", seed, "Generator seed")->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  std::filesystem::create_directories(out_dir);
  for (const auto& user : stylo::synthetic::generate_corpus(comments, seed)) {
    const auto path = std::filesystem::path(out_dir) / (user.author + ".json");
    std::ofstream out(path, std::ios::binary);
    out << stylo::corpus::to_json(user) << '\n';
    if (!out) {
      std::cerr << "failed writing " << path << '\n';
      return EXIT_FAILURE;
    }
    std::cout << path.string() << ' ' << user.comments.size() << '\n';
  }
  return EXIT_SUCCESS;
}
