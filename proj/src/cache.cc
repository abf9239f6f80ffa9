// Copyright 2026 The autoplex Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "autoplex/cache.h"

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cerrno>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

#include "autoplex/formats.h"

namespace autoplex {

namespace {

// Holds a flock on an open descriptor for the lifetime of the object.
class FileLock {
 public:
  FileLock(const std::string& path, int flags, int operation) {
    fd_ = ::open(path.c_str(), flags | O_CLOEXEC, 0644);
    if (fd_ < 0) return;
    while (::flock(fd_, operation) != 0) {
      if (errno != EINTR) {
        ::close(fd_);
        fd_ = -1;
        return;
      }
    }
  }
  ~FileLock() {
    if (fd_ >= 0) ::close(fd_);
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

  int fd() const { return fd_; }
  bool ok() const { return fd_ >= 0; }

 private:
  int fd_ = -1;
};

std::string KindName(const CacheRequest& r) {
  if (r.measure != Measure::kDeterministic) return "";
  return r.kind == DfaKind::kPartial ? "partial" : "total";
}

}  // namespace

std::string Sha256Hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &length, EVP_sha256(),
                 nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream out;
  out << std::hex << std::setfill('0');
  for (unsigned int i = 0; i < length; ++i) out << std::setw(2) << int{digest[i]};
  return out.str();
}

std::string CacheRequest::Canonical() const {
  Json j;
  j["measure"] = MeasureName(measure);
  j["kind"] = KindName(*this);
  if (word) {
    j["alphabet"] = word->alphabet();
    j["word"] = word->ToString();
  }
  if (relation) j["relation"] = RelationToJson(*relation);
  return j.dump();
}

bool CacheRequest::Accepts(const ComplexityWitness& w) const {
  if (w.measure != measure) return false;
  if (word) {
    if (measure == Measure::kDeterministic && kind == DfaKind::kTotal &&
        !std::holds_alternative<TotalDfa>(w.witness)) {
      return false;
    }
    return VerifyWordWitness(w, *word);
  }
  if (!relation) return false;
  const auto* dfa = std::get_if<TotalDfa>(&w.witness);
  return dfa != nullptr && dfa->num_states() == w.value &&
         dfa->alphabet() == relation->alphabet() &&
         w.value >= relation->class_count() && Coheres(*dfa, *relation);
}

ResultCache::ResultCache(std::string path, std::ostream* warnings)
    : path_(std::move(path)), warnings_(warnings) {}

std::optional<std::string> ResultCache::PathFromEnvironment() {
  const char* value = std::getenv(kCacheEnvironmentVariable);
  if (value == nullptr || *value == '\0') return std::nullopt;
  return std::string(value);
}

void ResultCache::Warn(const std::string& message) {
  if (warnings_ != nullptr) *warnings_ << "warning: cache: " << message << "\n";
}

std::optional<ComplexityWitness> ResultCache::Lookup(const CacheRequest& request) {
  FileLock lock(path_, O_RDONLY, LOCK_SH);
  if (!lock.ok()) {
    if (errno != ENOENT) Warn(path_ + ": " + std::strerror(errno));
    return std::nullopt;
  }
  std::ifstream in(path_);
  if (!in) {
    Warn(path_ + ": unreadable");
    return std::nullopt;
  }
  const std::string key = Sha256Hex(request.Canonical());
  std::optional<ComplexityWitness> found;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) continue;
    Json entry = Json::parse(line, nullptr, /*allow_exceptions=*/false);
    if (entry.is_discarded() || !entry.is_object()) {
      Warn("line " + std::to_string(line_number) + " is not JSON, skipped");
      continue;
    }
    if (entry.value("version", "") != kToolkitVersion) continue;
    if (entry.value("key", "") != key) continue;
    try {
      const Json& witness = entry.at("witness");
      if (entry.at("witness_digest").get<std::string>() != Sha256Hex(witness.dump())) {
        Warn("line " + std::to_string(line_number) + " has a bad digest, skipped");
        continue;
      }
      ComplexityWitness w = WitnessFromJson(witness);
      w.verified = request.Accepts(w);
      if (!w.verified) {
        Warn("line " + std::to_string(line_number) + " does not verify, skipped");
        continue;
      }
      found = std::move(w);
    } catch (const std::exception&) {
      Warn("line " + std::to_string(line_number) + " is malformed, skipped");
    }
  }
  return found;
}

void ResultCache::Store(const CacheRequest& request, const ComplexityWitness& w) {
  FileLock lock(path_, O_WRONLY | O_CREAT | O_APPEND, LOCK_EX);
  if (!lock.ok()) {
    Warn(path_ + ": " + std::strerror(errno));
    return;
  }
  const Json witness = WitnessToJson(w, request.word);
  Json entry;
  entry["version"] = kToolkitVersion;
  entry["key"] = Sha256Hex(request.Canonical());
  entry["measure"] = MeasureName(w.measure);
  entry["value"] = w.value;
  entry["witness_digest"] = Sha256Hex(witness.dump());
  entry["witness"] = witness;
  const std::string line = entry.dump() + "\n";
  std::size_t written = 0;
  while (written < line.size()) {
    const ssize_t r = ::write(lock.fd(), line.data() + written, line.size() - written);
    if (r < 0) {
      if (errno == EINTR) continue;
      Warn(path_ + ": " + std::strerror(errno));
      return;
    }
    written += static_cast<std::size_t>(r);
  }
}

ComplexityWitness CacheLookupOrSolve(
    const CacheRequest& request, ResultCache* cache,
    const std::function<ComplexityWitness()>& solve) {
  if (cache != nullptr) {
    if (auto hit = cache->Lookup(request)) return *std::move(hit);
  }
  ComplexityWitness w = solve();
  if (cache != nullptr && w.verified) cache->Store(request, w);
  return w;
}

}  // namespace autoplex
