#include "wiseowl/embedding.hpp"

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <future>
#include <stdexcept>

#include "httplib.h"
#include "json.hpp"
#include "wiseowl/error.hpp"
#include "wiseowl/text.hpp"

namespace wiseowl {

namespace {

constexpr std::uint64_t kSeed = 0x5157'4f57'4c00'0001ULL;

std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t token_hash(std::string_view token) {
  std::uint64_t h = 0xcbf29ce484222325ULL ^ kSeed;
  for (unsigned char c : token) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return mix64(h);
}

}  // namespace

double EmbeddingVector::norm() const {
  double sum = 0.0;
  for (double x : values) sum += x * x;
  return std::sqrt(sum);
}

void EmbedConfig::validate() const {
  if (batch_size < 1) throw std::invalid_argument("batch_size must be >= 1");
  if (max_tokens < 8) throw std::invalid_argument("max_tokens must be >= 8");
  if (parallelism < 1) throw std::invalid_argument("parallelism must be >= 1");
  bool remote = provider == EmbedProvider::kRemote;
  if (remote && (!endpoint || endpoint->empty())) {
    throw std::invalid_argument("remote embedder needs an endpoint URL");
  }
  if (!remote && endpoint) {
    throw std::invalid_argument("endpoint is only used by the remote embedder");
  }
}

EmbedConfig with_environment(EmbedConfig config) {
  if (config.provider == EmbedProvider::kRemote && !config.endpoint) {
    if (const char *url = std::getenv("WISEOWL_EMBED_URL"); url && *url) {
      config.endpoint = url;
    }
  }
  if (!config.auth_token) {
    if (const char *tok = std::getenv("WISEOWL_EMBED_TOKEN"); tok && *tok) {
      config.auth_token = tok;
    }
  }
  return config;
}

EmbeddingVector local_embed(std::string_view text) {
  EmbeddingVector v{std::vector<double>(kLocalDimension, 0.0)};
  for (const auto &token : tokenize(text)) {
    std::uint64_t h = token_hash(token);
    auto bucket = static_cast<std::size_t>(h % kLocalDimension);
    v.values[bucket] += ((h >> 63) & 1) ? 1.0 : -1.0;
  }
  double n = v.norm();
  if (n > 0.0) {
    for (double &x : v.values) x /= n;
  }
  return v;
}

std::vector<EmbeddingVector> LocalEmbedder::embed(
    std::span<const std::string> texts) {
  std::vector<EmbeddingVector> out;
  out.reserve(texts.size());
  for (const auto &t : texts) out.push_back(local_embed(t));
  return out;
}

RemoteEmbedder::RemoteEmbedder(EmbedConfig config) : config_(std::move(config)) {
  if (!config_.endpoint) {
    throw std::invalid_argument("remote embedder needs an endpoint URL");
  }
  const std::string &url = *config_.endpoint;
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos) {
    throw std::invalid_argument("endpoint must be an absolute http(s) URL: " +
                                url);
  }
  auto path_start = url.find('/', scheme_end + 3);
  origin_ = url.substr(0, path_start);
  path_ = path_start == std::string::npos ? "/" : url.substr(path_start);
}

std::vector<EmbeddingVector> RemoteEmbedder::embed(
    std::span<const std::string> texts) {
  nlohmann::json body;
  body["inputs"] = nlohmann::json::array();
  for (const auto &t : texts) body["inputs"].push_back(t);

  httplib::Client client(origin_);
  auto secs = std::chrono::duration_cast<std::chrono::seconds>(config_.timeout);
  auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(
      config_.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());
  client.set_write_timeout(secs.count(), usecs.count());
  httplib::Headers headers;
  if (config_.auth_token) {
    headers.emplace("Authorization", "Bearer " + *config_.auth_token);
  }

  auto res = client.Post(path_, headers, body.dump(), "application/json");
  if (!res) {
    throw RemoteUnavailable("embedding service " + *config_.endpoint + ": " +
                            httplib::to_string(res.error()));
  }
  if (res->status >= 400) {
    throw RemoteUnavailable("embedding service " + *config_.endpoint +
                            " returned HTTP " + std::to_string(res->status));
  }

  nlohmann::json reply;
  try {
    reply = nlohmann::json::parse(res->body);
  } catch (const nlohmann::json::exception &e) {
    throw RemoteUnavailable(std::string("malformed embedding response: ") +
                            e.what());
  }
  if (!reply.is_object() || !reply.contains("embeddings") ||
      !reply["embeddings"].is_array()) {
    throw RemoteUnavailable("embedding response lacks an 'embeddings' array");
  }
  const auto &rows = reply["embeddings"];
  if (rows.size() != texts.size()) {
    throw DimensionMismatch("embedding service returned " +
                            std::to_string(rows.size()) + " rows for " +
                            std::to_string(texts.size()) + " inputs");
  }
  std::vector<EmbeddingVector> out;
  out.reserve(rows.size());
  for (const auto &row : rows) {
    if (!row.is_array()) {
      throw RemoteUnavailable("embedding row is not an array");
    }
    EmbeddingVector v;
    v.values.reserve(row.size());
    for (const auto &x : row) {
      if (!x.is_number()) throw RemoteUnavailable("non-numeric embedding value");
      v.values.push_back(x.get<double>());
    }
    if (!out.empty() && v.dimension() != out.front().dimension()) {
      throw DimensionMismatch("embedding rows have inconsistent lengths");
    }
    out.push_back(std::move(v));
  }
  return out;
}

std::unique_ptr<Embedder> make_embedder(const EmbedConfig &config) {
  config.validate();
  if (config.provider == EmbedProvider::kRemote) {
    return std::make_unique<RemoteEmbedder>(config);
  }
  return std::make_unique<LocalEmbedder>();
}

std::vector<EmbeddingVector> embed_batch(Embedder &embedder,
                                         std::span<const std::string> texts,
                                         const EmbedConfig &config) {
  if (texts.empty()) throw EmptyInput("embed_batch called with no texts");
  config.validate();

  std::vector<std::string> clipped;
  clipped.reserve(texts.size());
  for (const auto &t : texts) {
    clipped.emplace_back(truncate_tokens(t, config.max_tokens));
  }

  const std::size_t n = clipped.size();
  const std::size_t chunks = (n + config.batch_size - 1) / config.batch_size;
  std::vector<std::vector<EmbeddingVector>> results(chunks);
  auto chunk_span = [&](std::size_t c) {
    std::size_t begin = c * config.batch_size;
    std::size_t len = std::min(config.batch_size, n - begin);
    return std::span<const std::string>(clipped).subspan(begin, len);
  };

  const std::size_t width =
      config.provider == EmbedProvider::kRemote ? config.parallelism : 1;
  for (std::size_t wave = 0; wave < chunks; wave += width) {
    std::vector<std::future<std::vector<EmbeddingVector>>> inflight;
    std::size_t end = std::min(chunks, wave + width);
    if (width == 1) {
      results[wave] = embedder.embed(chunk_span(wave));
      continue;
    }
    for (std::size_t c = wave; c < end; ++c) {
      inflight.push_back(std::async(std::launch::async, [&, c] {
        return embedder.embed(chunk_span(c));
      }));
    }
    // get() on every future before rethrowing so no task outlives the call.
    std::exception_ptr error;
    for (std::size_t c = wave; c < end; ++c) {
      try {
        results[c] = inflight[c - wave].get();
      } catch (...) {
        if (!error) error = std::current_exception();
      }
    }
    if (error) std::rethrow_exception(error);
  }

  std::vector<EmbeddingVector> out;
  out.reserve(n);
  for (std::size_t c = 0; c < chunks; ++c) {
    if (results[c].size() != chunk_span(c).size()) {
      throw DimensionMismatch("provider returned the wrong number of vectors");
    }
    for (auto &v : results[c]) {
      if (!out.empty() && v.dimension() != out.front().dimension()) {
        throw DimensionMismatch("embedding dimension changed between batches");
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

double cosine(const EmbeddingVector &u, const EmbeddingVector &v) {
  if (u.dimension() != v.dimension()) {
    throw DimensionMismatch("cosine of vectors with dimensions " +
                            std::to_string(u.dimension()) + " and " +
                            std::to_string(v.dimension()));
  }
  double dot = 0.0, nu = 0.0, nv = 0.0;
  for (std::size_t i = 0; i < u.values.size(); ++i) {
    dot += u.values[i] * v.values[i];
    nu += u.values[i] * u.values[i];
    nv += v.values[i] * v.values[i];
  }
  if (nu == 0.0 || nv == 0.0) return 0.0;
  double c = dot / (std::sqrt(nu) * std::sqrt(nv));
  return std::clamp(c, -1.0, 1.0);
}

}  // namespace wiseowl
