#include "stylo/bundle.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "stylo/error.hpp"

namespace stylo::bundle {

using nlohmann::json;

namespace {

json to_json(const linear::Hyperparams& hp) {
  return {{"learning_rate", hp.learning_rate},
          {"epochs", hp.epochs},
          {"l2_penalty", hp.l2_penalty},
          {"seed", hp.seed}};
}

linear::Hyperparams hyperparams_from_json(const json& j) {
  linear::Hyperparams hp;
  hp.learning_rate = j.at("learning_rate").get<Scalar>();
  hp.epochs = j.at("epochs").get<int>();
  hp.l2_penalty = j.at("l2_penalty").get<Scalar>();
  hp.seed = j.at("seed").get<std::uint64_t>();
  return hp;
}

json to_json(const ngram::MethodParams& p) { return {{"n", p.n}, {"features", p.features}}; }

ngram::MethodParams method_params_from_json(const json& j) {
  return {j.at("n").get<int>(), j.at("features").get<int>()};
}

std::string kind_name(ngram::FeatureKind k) {
  switch (k) {
    case ngram::FeatureKind::Word: return "word";
    case ngram::FeatureKind::CharNgram: return "char";
    case ngram::FeatureKind::PosNgram: return "pos";
  }
  return "word";
}

ngram::FeatureKind kind_from_name(const std::string& s) {
  if (s == "word") return ngram::FeatureKind::Word;
  if (s == "char") return ngram::FeatureKind::CharNgram;
  if (s == "pos") return ngram::FeatureKind::PosNgram;
  throw SchemaError("unknown vocabulary kind '" + s + "'");
}

json to_json(const ngram::MethodModel& m) {
  return {{"method", std::string(ngram::to_string(m.method))},
          {"vocab",
           {{"kind", kind_name(m.vocab.kind.kind)}, {"n", m.vocab.kind.n}, {"items", m.vocab.items}}},
          {"model", bundle::to_json(m.model)}};
}

ngram::MethodModel method_model_from_json(const json& j, ngram::MethodId expected) {
  if (j.at("method").get<std::string>() != ngram::to_string(expected)) {
    throw SchemaError("expected method " + std::string(ngram::to_string(expected)));
  }
  const auto& v = j.at("vocab");
  ngram::VocabKind kind{kind_from_name(v.at("kind").get<std::string>()), v.at("n").get<int>()};
  ngram::MethodModel m;
  m.method = expected;
  m.vocab = ngram::vocab_from_items(kind, v.at("items").get<std::vector<std::string>>());
  m.model = linear_model_from_json(j.at("model"));
  if (m.model.dim() != m.vocab.size()) {
    throw SchemaError("model dimension does not match vocabulary size");
  }
  return m;
}

json to_json(const cluster::ClusterModel& m) {
  auto vec = [](const auto& v) {
    return std::vector<Scalar>(v.data(), v.data() + v.size());
  };
  json centroids = json::array();
  for (int r = 0; r < 2; ++r) {
    cluster::StyloVector row = m.centroids.row(r).transpose();
    centroids.push_back(vec(row));
  }
  return {{"centroids", centroids},
          {"labels", {m.labels[0], m.labels[1]}},
          {"mean", vec(m.mean)},
          {"stddev", vec(m.stddev)}};
}

cluster::StyloVector stylo_vector_from_json(const json& j) {
  const auto v = j.get<std::vector<Scalar>>();
  if (v.size() != cluster::kStyloDims) throw SchemaError("stylometric vector must have 6 entries");
  return Eigen::Map<const cluster::StyloVector>(v.data());
}

cluster::ClusterModel cluster_model_from_json(const json& j) {
  cluster::ClusterModel m;
  const auto& c = j.at("centroids");
  if (c.size() != 2) throw SchemaError("cluster model must have exactly two centroids");
  for (int r = 0; r < 2; ++r) m.centroids.row(r) = stylo_vector_from_json(c.at(r)).transpose();
  const auto labels = j.at("labels").get<std::vector<bool>>();
  if (labels.size() != 2) throw SchemaError("cluster model must have two labels");
  m.labels = {labels[0], labels[1]};
  m.mean = stylo_vector_from_json(j.at("mean"));
  m.stddev = stylo_vector_from_json(j.at("stddev"));
  return m;
}

}  // namespace

json to_json(const linear::LinearModel& model) {
  return {{"dim", model.dim()},
          {"weights", std::vector<Scalar>(model.weights.data(),
                                          model.weights.data() + model.weights.size())},
          {"bias", model.bias},
          {"hyperparams", to_json(model.hyperparams)}};
}

linear::LinearModel linear_model_from_json(const json& j) {
  const auto weights = j.at("weights").get<std::vector<Scalar>>();
  if (j.at("dim").get<std::size_t>() != weights.size()) {
    throw SchemaError("linear model dim does not match weight count");
  }
  linear::LinearModel m;
  m.weights = Eigen::Map<const DenseVector<>>(weights.data(),
                                              static_cast<Eigen::Index>(weights.size()));
  m.bias = j.at("bias").get<Scalar>();
  m.hyperparams = hyperparams_from_json(j.at("hyperparams"));
  return m;
}

json to_json(const verifier::VerifierProfile& p) {
  std::vector<std::string> grams(p.profile_ngrams.begin(), p.profile_ngrams.end());
  std::sort(grams.begin(), grams.end());
  return {{"n", p.n},
          {"gamma", p.gamma},
          {"epsilon", p.epsilon},
          {"block_size", p.block_size},
          {"profile_ngrams", grams}};
}

verifier::VerifierProfile verifier_profile_from_json(const json& j) {
  verifier::VerifierProfile p;
  p.n = j.at("n").get<int>();
  p.gamma = j.at("gamma").get<Scalar>();
  p.epsilon = j.at("epsilon").get<Scalar>();
  p.block_size = j.at("block_size").get<int>();
  for (auto& g : j.at("profile_ngrams").get<std::vector<std::string>>()) {
    p.profile_ngrams.insert(std::move(g));
  }
  if (p.profile_ngrams.empty()) throw SchemaError("verifier profile has no n-grams");
  return p;
}

json to_json(const ensemble::EnsembleConfig& c) {
  return {{"word", to_json(c.word)},
          {"char", to_json(c.chars)},
          {"pos", to_json(c.pos)},
          {"hyperparams", to_json(c.hyperparams)},
          {"cluster_max_iters", c.cluster_max_iters},
          {"verifier",
           {{"n", c.verifier.n},
            {"gamma", c.verifier.gamma},
            {"block_size", c.verifier.block_size},
            {"calibration_gamma", c.verifier.calibration_gamma},
            {"max_iterations", c.verifier.max_iterations}}}};
}

ensemble::EnsembleConfig config_from_json(const json& j) {
  ensemble::EnsembleConfig c;
  c.word = method_params_from_json(j.at("word"));
  c.chars = method_params_from_json(j.at("char"));
  c.pos = method_params_from_json(j.at("pos"));
  c.hyperparams = hyperparams_from_json(j.at("hyperparams"));
  c.cluster_max_iters = j.at("cluster_max_iters").get<int>();
  const auto& v = j.at("verifier");
  c.verifier.n = v.at("n").get<int>();
  c.verifier.gamma = v.at("gamma").get<Scalar>();
  c.verifier.block_size = v.at("block_size").get<int>();
  c.verifier.calibration_gamma = v.at("calibration_gamma").get<Scalar>();
  c.verifier.max_iterations = v.at("max_iterations").get<int>();
  return c;
}

json to_json(const ModelBundle& b) {
  return {{"format_version", b.format_version},
          {"target_author", b.target_author},
          {"config", to_json(b.model.config)},
          {"models",
           {{"word_freq", to_json(b.model.word)},
            {"char_ngram", to_json(b.model.chars)},
            {"pos_ngram", to_json(b.model.pos)},
            {"stylo_cluster", to_json(b.model.cluster)},
            {"verifier", to_json(b.model.verifier)}}}};
}

ModelBundle bundle_from_json(const json& j) {
  if (!j.is_object() || !j.contains("format_version")) {
    throw SchemaError("not a model bundle: missing format_version");
  }
  const int version = j.at("format_version").get<int>();
  if (version != kFormatVersion) {
    throw SchemaError("unsupported bundle format_version " + std::to_string(version) +
                      " (expected " + std::to_string(kFormatVersion) + ")");
  }
  try {
    ModelBundle b;
    b.format_version = version;
    b.target_author = j.at("target_author").get<std::string>();
    b.model.config = config_from_json(j.at("config"));
    const auto& m = j.at("models");
    b.model.word = method_model_from_json(m.at("word_freq"), ngram::MethodId::WordFreq);
    b.model.chars = method_model_from_json(m.at("char_ngram"), ngram::MethodId::CharNgram);
    b.model.pos = method_model_from_json(m.at("pos_ngram"), ngram::MethodId::PosNgram);
    b.model.cluster = cluster_model_from_json(m.at("stylo_cluster"));
    b.model.verifier = verifier_profile_from_json(m.at("verifier"));
    return b;
  } catch (const json::exception& e) {
    throw SchemaError(std::string("invalid model bundle: ") + e.what());
  }
}

std::string dump(const ModelBundle& bundle) { return to_json(bundle).dump(1) + "\n"; }

ModelBundle parse(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("bundle is not valid JSON: ") + e.what(), e.byte);
  }
  return bundle_from_json(j);
}

void save(const ModelBundle& bundle, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write bundle to " + path.string());
  out << dump(bundle);
  if (!out) throw Error("failed writing bundle to " + path.string());
}

ModelBundle load(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open bundle " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

}  // namespace stylo::bundle
