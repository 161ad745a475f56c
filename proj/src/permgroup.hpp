#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "perm.hpp"

namespace modchar {

// from-scratch mode caps (larger groups must enter via table ingestion)
inline constexpr uint64_t kMaxScratchOrder = 1'000'000;
inline constexpr int kMaxDegree = 64;

struct ConjClass {
    Perm rep;        // lexicographically minimal element of the class
    uint64_t size = 0;
    uint64_t element_order = 0;
};

struct ClassData {
    std::vector<ConjClass> classes;              // canonical order: (element order, size, minimal rep)
    std::unordered_map<std::string, int> class_of;  // element key -> class index
    uint64_t exponent = 1;
};

/// Finite permutation group given by generators. Immutable after
/// construction; the stabilizer chain and class data are built lazily
/// under a guard, all queries are const.
class PermutationGroup {
public:
    PermutationGroup(int degree, std::vector<Perm> generators);

    static PermutationGroup from_text(const std::string& text);  // degree line + one generator per line
    std::string to_text() const;

    int degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return gens_; }
    Perm identity() const { return Perm(degree_); }

    uint64_t order() const;
    bool contains(const Perm& g) const;

    // all elements in a deterministic order (order() <= kMaxScratchOrder)
    std::vector<Perm> elements() const;

    const ClassData& conjugacy_classes() const;
    int class_of(const Perm& g) const;

    PermutationGroup centralizer(const Perm& g) const;
    PermutationGroup centralizer_by_enumeration(const Perm& g) const;  // cross-check route, |G| <= 1e4

    PermutationGroup sylow_subgroup(uint64_t p, uint64_t seed = 0) const;
    PermutationGroup normalizer(const PermutationGroup& H) const;

    bool is_abelian() const;

    // deterministic content hash of (degree, sorted generator images)
    uint64_t content_hash() const;

private:
    struct ChainLevel {
        int base_point = 0;
        std::vector<Perm> gens;                     // strong generators at this level
        std::vector<int> orbit;                     // BFS order
        std::unordered_map<int, Perm> transversal;  // point -> u with base^u = point
    };
    struct Chain {
        std::vector<ChainLevel> levels;
        uint64_t order = 1;
    };

    const Chain& chain() const;
    static void extend_chain(Chain& c, int degree, const Perm& g, size_t level);
    static std::pair<Perm, size_t> sift(const Chain& c, const Perm& g);

    int degree_;
    std::vector<Perm> gens_;

    mutable std::once_flag chain_once_;
    mutable std::unique_ptr<Chain> chain_;
    mutable std::once_flag class_once_;
    mutable std::unique_ptr<ClassData> classes_;
};

// commuting factorization g = g_p * g_p' with both factors powers of g
std::pair<Perm, Perm> p_part_decomposition(const Perm& g, uint64_t p);

}  // namespace modchar
