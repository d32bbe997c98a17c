/*
 Copyright 2026 The melkit Authors
 Licensed under the Apache License, Version 2.0 (the "License");
 you may not use this file except in compliance with the License.
 You may obtain a copy of the License at

      http://www.apache.org/licenses/LICENSE-2.0

 Unless required by applicable law or agreed to in writing, software
 distributed under the License is distributed on an "AS IS" BASIS,
 WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 See the License for the specific language governing permissions and
 limitations under the License.
*/
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>

namespace melkit {

// Error taxonomy shared by all modules. Every failure surfaces as one of
// these so callers (and the CLI) can map them to exit codes uniformly.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class invalid_input : public error {
public:
    using error::error;
};

class invalid_config : public error {
public:
    using error::error;
};

class invalid_shape : public error {
public:
    using error::error;
};

class data_integrity_error : public error {
public:
    using error::error;
};

class undefined_metric : public error {
public:
    using error::error;
};

class io_error : public error {
public:
    using error::error;
};

// 64-bit FNV-1a. Used for corpus fold sharding, config digests and seed
// derivation; dependable and trivially portable.
inline constexpr std::uint64_t kFnv64Offset = 14695981039346656037ull;
inline constexpr std::uint64_t kFnv64Prime  = 1099511628211ull;

inline constexpr std::uint64_t fnv1a64(std::string_view bytes,
                                       std::uint64_t state = kFnv64Offset)
{
    for (unsigned char c : bytes)
    {
        state ^= static_cast<std::uint64_t>(c);
        state *= kFnv64Prime;
    }
    return state;
}

using Rng = std::mt19937_64;

// All randomness in a run fans out from one root seed. Components ask for a
// named stream so adding a consumer never perturbs the draws of another.
inline std::uint64_t derive_seed(std::uint64_t root, std::string_view component)
{
    char root_bytes[8];
    for (int i = 0; i < 8; ++i)
        root_bytes[i] = static_cast<char>((root >> (8 * i)) & 0xff);
    std::uint64_t h = fnv1a64(std::string_view(root_bytes, 8));
    h = fnv1a64(component, h);
    return h;
}

inline Rng make_rng(std::uint64_t root, std::string_view component)
{
    return Rng(derive_seed(root, component));
}

} // namespace melkit
