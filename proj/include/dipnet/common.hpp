#pragma once

#include <cstdint>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <string>

namespace dipnet {

// Error taxonomy. Every module throws the subtype its contract names so
// callers (and tests) can distinguish misconfiguration from bad data.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct FusionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct IngestError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct SampleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TrainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PruneError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CheckpointError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct PipelineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Rng = std::mt19937_64;

// Derive an independent stream from a base seed. Streams keyed by
// (seed, index) stay deterministic across parallel workers.
inline Rng make_rng(uint64_t seed, uint64_t stream = 0) {
    std::seed_seq seq{seed, stream, uint64_t(0x9e3779b97f4a7c15ull)};
    return Rng(seq);
}

inline uint64_t fnv1a64(const void* data, size_t n, uint64_t h = 0xcbf29ce484222325ull) {
    const auto* p = static_cast<const unsigned char*>(data);
    for (size_t i = 0; i < n; ++i) {
        h ^= p[i];
        h *= 0x100000001b3ull;
    }
    return h;
}

inline uint64_t fnv1a64(const std::string& s) {
    return fnv1a64(s.data(), s.size());
}

inline std::string hex64(uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return std::string(buf);
}

inline void log_info(const std::string& msg) {
    std::fprintf(stderr, "[dipnet] %s\n", msg.c_str());
}

inline void log_warn(const std::string& msg) {
    std::fprintf(stderr, "[dipnet] warning: %s\n", msg.c_str());
}

}  // namespace dipnet
