#include "stylo/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stylo/bundle.hpp"
#include "stylo/corpus.hpp"
#include "stylo/error.hpp"
#include "stylo/evaluation.hpp"
#include "stylo/ngram_models.hpp"
#include "stylo/stylo_cluster.hpp"

namespace stylo::cli {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

struct Options {
  std::string corpus_dir;
  std::string target;
  std::string author;
  std::string out_path;
  std::string bundle_path;
  std::optional<std::string> text;
  std::uint64_t seed = 42;
  int folds = 10;
  std::string method;
  std::string gamma;
  std::string ngram;
  std::string features;
  std::string block_size;
  std::optional<std::size_t> max_positives;
  std::optional<std::size_t> max_negatives;
};

template <typename T>
std::vector<T> parse_range(const std::string& spec) {
  auto number = [&](const std::string& s) -> T {
    std::istringstream in(s);
    T value{};
    in >> value;
    if (s.empty() || in.fail() || !in.eof()) throw UsageError("malformed range '" + spec + "'");
    return value;
  };
  std::vector<T> out;
  if (spec.find(',') != std::string::npos) {
    std::istringstream in(spec);
    for (std::string part; std::getline(in, part, ',');) out.push_back(number(part));
    return out;
  }
  const auto dots = spec.find("..");
  if (dots == std::string::npos) return {number(spec)};
  const auto colon = spec.find(':', dots);
  const T lo = number(spec.substr(0, dots));
  const T hi = number(spec.substr(dots + 2, colon == std::string::npos ? std::string::npos
                                                                        : colon - dots - 2));
  const T step = colon == std::string::npos ? T(1) : number(spec.substr(colon + 1));
  if (!(step > 0) || hi < lo) throw UsageError("malformed range '" + spec + "'");
  const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9)) + 1;
  if (count > 100000) throw UsageError("range '" + spec + "' is too large");
  for (long i = 0; i < count; ++i) out.push_back(static_cast<T>(lo + step * static_cast<T>(i)));
  return out;
}

template <typename T>
std::optional<T> single(const std::string& spec, const char* flag) {
  if (spec.empty()) return std::nullopt;
  const auto values = parse_range<T>(spec);
  if (values.size() != 1) throw UsageError(std::string(flag) + " takes a single value here");
  return values.front();
}

void write_output(const std::string& path, const std::string& content, std::ostream& out) {
  if (path.empty()) {
    out << content;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << content;
}

corpus::Dataset load(const Options& o) {
  corpus::DatasetOptions opts;
  opts.seed = o.seed;
  opts.max_positives = o.max_positives;
  opts.max_negatives = o.max_negatives;
  return corpus::load_dataset(o.corpus_dir, o.target, opts);
}

ensemble::Method method_from_name(const std::string& name) {
  if (name == "word") return ensemble::Method::WordFreq;
  if (name == "char") return ensemble::Method::CharNgram;
  if (name == "pos") return ensemble::Method::PosNgram;
  if (name == "cluster") return ensemble::Method::StyloCluster;
  if (name == "verifier") return ensemble::Method::Verifier;
  throw UsageError("unknown method '" + name + "'");
}

// --ngram/--features apply to the method named by --method (char by default);
// --gamma/--block-size always apply to the verifier.
ensemble::EnsembleConfig config_from(const Options& o) {
  ensemble::EnsembleConfig config;
  config.hyperparams.seed = o.seed;
  const auto n = single<int>(o.ngram, "--ngram");
  const auto k = single<int>(o.features, "--features");
  if ((n && *n <= 0) || (k && *k <= 0)) throw UsageError("--ngram/--features must be positive");
  switch (method_from_name(o.method.empty() ? "char" : o.method)) {
    case ensemble::Method::WordFreq:
      if (k) config.word.features = *k;
      break;
    case ensemble::Method::CharNgram:
      if (n) config.chars.n = *n;
      if (k) config.chars.features = *k;
      break;
    case ensemble::Method::PosNgram:
      if (n) config.pos.n = *n;
      if (k) config.pos.features = *k;
      break;
    case ensemble::Method::Verifier:
      if (n) config.verifier.n = *n;
      break;
    case ensemble::Method::StyloCluster:
      break;
  }
  if (auto g = single<double>(o.gamma, "--gamma")) config.verifier.gamma = *g;
  if (auto b = single<int>(o.block_size, "--block-size")) {
    if (*b <= 0) throw UsageError("--block-size must be positive");
    config.verifier.block_size = *b;
  }
  return config;
}

int cmd_validate(const Options& o, std::ostream& out) {
  const auto users = corpus::load_directory(o.corpus_dir);
  if (users.empty()) throw InsufficientDataError("no *.json user files in " + o.corpus_dir);
  for (const auto& u : users) out << u.author << ' ' << u.comments.size() << '\n';
  return kOk;
}

int cmd_train(const Options& o, std::ostream& out) {
  const auto config = config_from(o);
  const auto dataset = load(o);
  bundle::ModelBundle b;
  b.target_author = o.target;
  b.model = ensemble::train_ensemble(dataset, config);
  bundle::save(b, o.out_path);

  const auto& m = b.model;
  out << "samples " << dataset.size() << " (positive " << dataset.positives() << ", negative "
      << dataset.negatives() << ")\n";
  out << "word_freq features=" << m.word.vocab.size() << '\n';
  out << "char_ngram n=" << m.chars.vocab.kind.n << " features=" << m.chars.vocab.size() << '\n';
  out << "pos_ngram n=" << m.pos.vocab.kind.n << " features=" << m.pos.vocab.size() << '\n';
  out << "stylo_cluster labels=" << m.cluster.labels[0] << ',' << m.cluster.labels[1] << '\n';
  out << "verifier n=" << m.verifier.n << " profile_ngrams=" << m.verifier.profile_ngrams.size()
      << " epsilon=" << m.verifier.epsilon << " gamma=" << m.verifier.gamma << '\n';
  out << "bundle written to " << o.out_path << '\n';
  return kOk;
}

int cmd_eval(const Options& o, std::ostream& out) {
  const auto config = config_from(o);
  const auto dataset = load(o);
  const auto report = eval::cross_validate(dataset, o.folds, o.seed, config);
  write_output(o.out_path, eval::report_csv(report), out);
  out << eval::summary_line(report.pooled) << '\n';
  return kOk;
}

int cmd_verify(const Options& o, std::istream& in, std::ostream& out) {
  std::string text;
  if (o.text) {
    text = *o.text;
  } else {
    text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.pop_back();
  }
  if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
    throw UsageError("no text to verify (pass --text or pipe it on standard input)");
  }
  const auto b = bundle::load(o.bundle_path);
  const auto votes = ensemble::predict_votes(b.model, text);
  const bool verdict = ensemble::majority_vote(votes);
  nlohmann::ordered_json j;
  j["verdict"] = verdict;
  for (std::size_t i = 0; i < ensemble::kMethodCount; ++i) {
    j["votes"][std::string(ensemble::to_string(ensemble::kMethods[i]))] = votes[i];
  }
  out << j.dump() << '\n';
  return verdict ? kAuthored : kNotAuthored;
}

int cmd_features(const Options& o, std::ostream& out) {
  const auto& author = o.author.empty() ? o.target : o.author;
  if (author.empty()) throw UsageError("features needs --author");
  const auto path = std::filesystem::path(o.corpus_dir) / (author + ".json");
  if (!std::filesystem::exists(path)) {
    throw InsufficientDataError("author file not found: expected " + path.string());
  }
  const auto user = corpus::load_user_path(path);
  if (user.comments.empty()) {
    throw InsufficientDataError("author " + author + " has no comments");
  }
  const auto avg = cluster::average_stylo(user.comments).as_vector();
  const auto& names = cluster::StyloFeatures::names();
  char line[96];
  for (int d = 0; d < cluster::kStyloDims; ++d) {
    // Lexical rates to two decimals, punctuation rates to three.
    std::snprintf(line, sizeof line, d < 3 ? "%s %.2f\n" : "%s %.3f\n",
                  std::string(names[static_cast<std::size_t>(d)]).c_str(), avg[d]);
    out << line;
  }
  return kOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  if (o.method.empty()) throw UsageError("sweep needs --method");
  const auto method = method_from_name(o.method);
  std::vector<int> n_range;
  std::vector<int> k_range;
  auto or_default = [](const std::string& spec, const char* fallback) {
    return parse_range<int>(spec.empty() ? std::string(fallback) : spec);
  };
  ngram::MethodId id{};
  switch (method) {
    case ensemble::Method::WordFreq:
      id = ngram::MethodId::WordFreq;
      n_range = {1};
      if (!o.ngram.empty() && parse_range<int>(o.ngram) != std::vector<int>{1}) {
        throw UsageError("word frequencies only support --ngram 1");
      }
      k_range = or_default(o.features, "100..1000:100");
      break;
    case ensemble::Method::CharNgram:
      id = ngram::MethodId::CharNgram;
      n_range = or_default(o.ngram, "1..10");
      k_range = or_default(o.features, "100..500:100");
      break;
    case ensemble::Method::PosNgram:
      id = ngram::MethodId::PosNgram;
      n_range = or_default(o.ngram, "1..5");
      k_range = or_default(o.features, "30..580:50");
      break;
    case ensemble::Method::Verifier: {
      const auto n = or_default(o.ngram, "3");
      const auto gammas = parse_range<double>(o.gamma.empty() ? "0..6" : o.gamma);
      for (int v : n) {
        if (v <= 0) throw UsageError("--ngram values must be positive");
      }
      Options base = o;
      base.ngram.clear();
      base.gamma.clear();
      const auto params = config_from(base).verifier;
      const auto dataset = load(o);
      const auto [train, test] = corpus::split(dataset, 0.7, o.seed);
      write_output(o.out_path,
                   eval::verifier_sweep_csv(eval::sweep_verifier(train, test, n, gammas, params)),
                   out);
      return kOk;
    }
    case ensemble::Method::StyloCluster:
      throw UsageError("the cluster method has no sweep parameters");
  }
  for (int v : n_range) {
    if (v <= 0) throw UsageError("--ngram values must be positive");
  }
  for (int v : k_range) {
    if (v <= 0) throw UsageError("--features values must be positive");
  }
  linear::Hyperparams hp;
  hp.seed = o.seed;
  const auto dataset = load(o);
  const auto [train, test] = corpus::split(dataset, 0.7, o.seed);
  write_output(o.out_path, ngram::sweep_csv(ngram::sweep(train, test, id, n_range, k_range, hp)),
               out);
  return kOk;
}

}  // namespace

std::vector<int> parse_int_range(const std::string& spec) { return parse_range<int>(spec); }
std::vector<double> parse_real_range(const std::string& spec) {
  return parse_range<double>(spec);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Short-text authorship verification with a five-method stylometric ensemble",
               "stylo"};
  app.require_subcommand(1);
  Options o;

  auto corpus_flags = [&](CLI::App* sub) {
    sub->add_option("--corpus-dir", o.corpus_dir, "Directory of <user>.json files")->required();
  };
  auto target_flag = [&](CLI::App* sub) {
    sub->add_option("--target", o.target, "Target author (file stem)")->required();
  };
  auto seed_flag = [&](CLI::App* sub) {
    sub->add_option("--seed", o.seed, "Random seed")->capture_default_str();
  };
  auto model_flags = [&](CLI::App* sub) {
    sub->add_option("--method", o.method, "word|char|pos|cluster|verifier");
    sub->add_option("--ngram", o.ngram, "n-gram size (range for sweep)");
    sub->add_option("--features", o.features, "Feature count K (range for sweep)");
    sub->add_option("--gamma", o.gamma, "Verifier margin (range for sweep)");
    sub->add_option("--block-size", o.block_size, "Verifier block size in characters");
    sub->add_option("--max-positives", o.max_positives, "Cap on target comments");
    sub->add_option("--max-negatives", o.max_negatives, "Cap on other authors' comments");
  };

  auto* validate = app.add_subcommand("validate", "Check every user file in a corpus");
  corpus_flags(validate);

  auto* train = app.add_subcommand("train", "Train and save an ensemble bundle");
  corpus_flags(train);
  target_flag(train);
  seed_flag(train);
  model_flags(train);
  train->add_option("--out", o.out_path, "Bundle path")->required();

  auto* evaluate = app.add_subcommand("eval", "Stratified k-fold cross-validation");
  corpus_flags(evaluate);
  target_flag(evaluate);
  seed_flag(evaluate);
  model_flags(evaluate);
  evaluate->add_option("--folds", o.folds, "Fold count")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evaluate->add_option("--out", o.out_path, "Report CSV path (default: standard output)");

  auto* verify = app.add_subcommand("verify", "Verify one text against a bundle");
  verify->add_option("--bundle", o.bundle_path, "Bundle path")->required();
  verify->add_option("--text", o.text, "Text to verify (default: standard input)");

  auto* features = app.add_subcommand("features", "Average stylometric features of an author");
  corpus_flags(features);
  features->add_option("--author,--target", o.author, "Author (file stem)")->required();

  auto* sweep = app.add_subcommand("sweep", "Accuracy grid over method parameters");
  corpus_flags(sweep);
  target_flag(sweep);
  seed_flag(sweep);
  model_flags(sweep);
  sweep->add_option("--out", o.out_path, "CSV path (default: standard output)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty()) reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*validate) return cmd_validate(o, out);
    if (*train) return cmd_train(o, out);
    if (*evaluate) return cmd_eval(o, out);
    if (*verify) return cmd_verify(o, in, out);
    if (*features) return cmd_features(o, out);
    if (*sweep) return cmd_sweep(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kError;
  }
  return kUsage;
}

}  // namespace stylo::cli
