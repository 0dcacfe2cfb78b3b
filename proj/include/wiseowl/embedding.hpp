#pragma once

#include <chrono>
#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace wiseowl {

struct EmbeddingVector {
  std::vector<double> values;

  std::size_t dimension() const { return values.size(); }
  double norm() const;
  bool operator==(const EmbeddingVector &) const = default;
};

enum class EmbedProvider { kLocal, kRemote };

struct EmbedConfig {
  EmbedProvider provider = EmbedProvider::kLocal;
  std::optional<std::string> endpoint;
  std::size_t batch_size = 64;
  std::size_t max_tokens = 128;
  std::chrono::milliseconds timeout{60000};
  std::optional<std::string> auth_token;
  // Upper bound on concurrent remote requests.
  std::size_t parallelism = 4;

  // Throws std::invalid_argument when an invariant is broken.
  void validate() const;
};

// Fills endpoint / auth_token from WISEOWL_EMBED_URL / WISEOWL_EMBED_TOKEN
// where the config leaves them unset.
EmbedConfig with_environment(EmbedConfig config);

// A text-embedding provider. embed() receives one request-sized chunk and
// must return one vector per text, in order. Implementations are safe to
// call from several threads at once.
class Embedder {
 public:
  virtual ~Embedder() = default;
  virtual std::vector<EmbeddingVector> embed(
      std::span<const std::string> texts) = 0;
  virtual std::string name() const = 0;
};

inline constexpr std::size_t kLocalDimension = 256;

// Deterministic hashed bag-of-tokens vector, L2-normalized; zero vector for
// text without tokens.
EmbeddingVector local_embed(std::string_view text);

class LocalEmbedder : public Embedder {
 public:
  std::vector<EmbeddingVector> embed(std::span<const std::string> texts) override;
  std::string name() const override { return "local"; }
};

// POSTs {"inputs": [...]} to the endpoint and expects
// {"embeddings": [[...], ...]} back.
class RemoteEmbedder : public Embedder {
 public:
  explicit RemoteEmbedder(EmbedConfig config);
  std::vector<EmbeddingVector> embed(std::span<const std::string> texts) override;
  std::string name() const override { return "remote"; }

 private:
  EmbedConfig config_;
  std::string origin_;  // scheme://host[:port]
  std::string path_;
};

std::unique_ptr<Embedder> make_embedder(const EmbedConfig &config);

// Truncates every text to config.max_tokens tokens, sends chunks of
// config.batch_size to the provider (remote chunks run concurrently up to
// config.parallelism) and checks that all vectors share one dimension.
std::vector<EmbeddingVector> embed_batch(Embedder &embedder,
                                         std::span<const std::string> texts,
                                         const EmbedConfig &config);

// Cosine similarity; 0 when either vector has zero norm.
double cosine(const EmbeddingVector &u, const EmbeddingVector &v);

}  // namespace wiseowl
