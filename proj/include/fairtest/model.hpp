#pragma once

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>

#include "fairtest/http.hpp"
#include "json.hpp"

namespace fairtest {

struct DecodingConfig {
  double temperature = 0.0;
  int max_tokens = 150;
  std::string model_name;
  bool deterministic = true;

  // 0 when deterministic.
  double effective_temperature() const noexcept { return deterministic ? 0.0 : temperature; }

  // temperature 0.7, 150 tokens, sampling enabled.
  static DecodingConfig paper(std::string model_name);
};

nlohmann::json to_json(const DecodingConfig& c);
DecodingConfig decoding_from_json(const nlohmann::json& j);

struct ModelResponse {
  std::string text;
  std::string model_name;
  double latency_ms = 0.0;
  std::string request_fingerprint;
  bool cached = false;
};

// Hex hash of the prompt and the effective decoding parameters.
std::string request_fingerprint(std::string_view prompt, const DecodingConfig& config);

class ModelBackend {
 public:
  virtual ~ModelBackend() = default;
  virtual ModelResponse complete(std::string_view prompt, const DecodingConfig& config) = 0;
};

struct RetryPolicy {
  int max_retries = 3;  // attempts = 1 + max_retries
  std::chrono::milliseconds base_delay{250};
  std::chrono::milliseconds max_delay{8000};
  std::function<void(std::chrono::milliseconds)> sleep;  // defaults to sleep_for
};

// OpenAI-compatible chat completions over HTTP(S).
class ChatClient : public ModelBackend {
 public:
  ChatClient(std::string endpoint, std::string api_key, RetryPolicy retry = {},
             double timeout_s = 60.0);

  // Reads the key from FAIRTEST_API_KEY (empty when unset).
  static ChatClient from_env(std::string endpoint, RetryPolicy retry = {}, double timeout_s = 60.0);

  // Throws PreconditionError, TransportError, AuthError, RateLimited,
  // MalformedResponse.
  ModelResponse complete(std::string_view prompt, const DecodingConfig& config) override;

 private:
  Endpoint endpoint_;
  std::string api_key_;
  RetryPolicy retry_;
  double timeout_s_;
};

// Refills `rate` tokens per second up to `burst`. rate <= 0 disables limiting.
class TokenBucket {
 public:
  explicit TokenBucket(double rate, double burst = 1.0);
  void acquire();

 private:
  using Clock = std::chrono::steady_clock;
  double rate_;
  double burst_;
  double tokens_;
  Clock::time_point last_;
  std::mutex mu_;
};

// Append-only JSONL response cache keyed by request fingerprint. A final line
// without a newline is an interrupted write and is dropped on open; any other
// unreadable line is a StorageError.
class CacheStore {
 public:
  explicit CacheStore(std::filesystem::path path);

  std::optional<ModelResponse> get(const std::string& fingerprint) const;
  void put(const ModelResponse& response);
  std::size_t size() const;
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
  std::unordered_map<std::string, ModelResponse> entries_;
  std::ofstream out_;
  mutable std::mutex mu_;
};

// Returns the stored response (cached=true) or calls the backend and stores
// the result.
ModelResponse cached_complete(CacheStore& store, ModelBackend& backend, std::string_view prompt,
                              const DecodingConfig& config);

}  // namespace fairtest
