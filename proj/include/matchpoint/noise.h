// Copyright 2026 Matchpoint Contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MATCHPOINT_NOISE_H
#define MATCHPOINT_NOISE_H

#include <algorithm>
#include <array>
#include <iterator>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>
#include <vector>

#include "matchpoint/model_graph.h"

namespace mp {

/// A set of ids under GF(2) addition: `a + b` is the symmetric difference.
/// Stored sorted and duplicate free.
template <typename Tag>
class Gf2Set {
   public:
    Gf2Set() = default;
    Gf2Set(std::initializer_list<uint32_t> ids) : Gf2Set(std::vector<uint32_t>(ids)) {
    }
    /// Ids appearing an even number of times cancel.
    explicit Gf2Set(std::vector<uint32_t> ids) {
        std::sort(ids.begin(), ids.end());
        for (size_t i = 0; i < ids.size();) {
            size_t j = i;
            while (j < ids.size() && ids[j] == ids[i]) {
                ++j;
            }
            if ((j - i) % 2 == 1) {
                ids_.push_back(ids[i]);
            }
            i = j;
        }
    }

    Gf2Set& operator+=(const Gf2Set& other) {
        std::vector<uint32_t> out;
        out.reserve(ids_.size() + other.ids_.size());
        std::set_symmetric_difference(
            ids_.begin(), ids_.end(), other.ids_.begin(), other.ids_.end(), std::back_inserter(out));
        ids_ = std::move(out);
        return *this;
    }
    friend Gf2Set operator+(Gf2Set a, const Gf2Set& b) {
        a += b;
        return a;
    }
    void toggle(uint32_t id) {
        auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
        if (it != ids_.end() && *it == id) {
            ids_.erase(it);
        } else {
            ids_.insert(it, id);
        }
    }
    bool contains(uint32_t id) const {
        return std::binary_search(ids_.begin(), ids_.end(), id);
    }

    const std::vector<uint32_t>& ids() const {
        return ids_;
    }
    size_t size() const {
        return ids_.size();
    }
    bool empty() const {
        return ids_.empty();
    }
    auto begin() const {
        return ids_.begin();
    }
    auto end() const {
        return ids_.end();
    }
    bool operator==(const Gf2Set&) const = default;
    auto operator<=>(const Gf2Set&) const = default;

   private:
    std::vector<uint32_t> ids_;
};

struct EdgeSetTag;
struct DefectSetTag;

/// Subset of model-graph edges that experienced an error (or a correction).
using ErrorPattern = Gf2Set<EdgeSetTag>;
/// Stabilizer vertices with a nontrivial measurement outcome.
using Syndrome = Gf2Set<DefectSetTag>;

struct Parity {
    bool left = false;
    bool right = false;

    Parity operator^(const Parity& o) const {
        return {left != o.left, right != o.right};
    }
    bool operator==(const Parity&) const = default;
};

enum class LogicalClass : uint8_t { not_logical_operator, trivial_logical, nontrivial_logical };

const char* to_string(LogicalClass c);

/// 64-bit Mersenne Twister; its output sequence is fixed by the C++ standard.
using Rng = std::mt19937_64;

/// Mixes a base seed with a stream index (splitmix64 finalizer).
uint64_t derive_seed(uint64_t seed, uint64_t stream);

/// Uniform double in [0, 1) built from the top 53 bits of one draw.
inline double uniform01(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

ErrorPattern sample_iid(const ModelGraph& graph, uint64_t seed);
ErrorPattern sample_iid(const ModelGraph& graph, Rng& rng);
/// Independent flips with explicit per-edge probabilities.
ErrorPattern sample_bernoulli(std::span<const double> probs, Rng& rng);

Syndrome syndrome_of(const ModelGraph& graph, const ErrorPattern& pattern);
Parity parity_of(const ModelGraph& graph, const ErrorPattern& pattern);
LogicalClass classify(const ModelGraph& graph, const ErrorPattern& pattern);

/// Product over edges of p (flipped) or 1 - p (not flipped).
double pattern_probability(const ModelGraph& graph, const ErrorPattern& pattern);
/// Sum of edge weights of the pattern.
double pattern_weight(const ModelGraph& graph, const ErrorPattern& pattern);

/// Largest graph accepted by the exhaustive routines.
inline constexpr size_t kMaxEnumerationEdges = 20;

struct CosetDecision {
    ErrorPattern correction;  ///< Most likely pattern in the winning coset.
    Parity parity;            ///< Parity class of the winning coset.
    double winning_mass = 0;
    double losing_mass = 0;
    bool tied = false;  ///< Masses equal to 1e-12 relative.
};

/// Optimal coset decoding by exhaustive enumeration. Cosets are keyed by boundary parity.
/// On an exact tie the coset whose most likely pattern is lexicographically least wins.
CosetDecision brute_force_coset_decode(const ModelGraph& graph, const Syndrome& syndrome);

}  // namespace mp

#endif
