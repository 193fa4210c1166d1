#pragma once

#include <compare>
#include <vector>

#include "uavpki/bytes.hpp"

namespace uavpki::merkle {

// Binary Merkle tree over 32-byte leaves. A lone node at the end of a level
// is paired with itself; a single leaf is its own root. Interior node hash
// is sha256(left || right).
//
// A proof carries the leaf index and the sibling per level, bottom up. The
// side of each fold is derived from the index bits instead of stored flags:
// an even position feeds the running hash as the left input. Verification
// rejects a right-positioned node whose sibling equals the running hash, so
// the self-pairing rule cannot be abused to move a leaf; trees are expected
// to have distinct leaves (block bodies guarantee distinct tx ids).

struct MerkleProof {
    uint32_t leaf_index = 0;
    std::vector<Hash256> siblings;

    auto operator<=>(const MerkleProof&) const = default;
};

/// Number of pairing levels: ceil(log2(leaf_count)); 0 for a single leaf.
size_t tree_levels(size_t leaf_count);

Hash256 node_hash(const Hash256& left, const Hash256& right);

/// Root over the given leaves. MerkleError on an empty list.
Hash256 merkle_root(const std::vector<Hash256>& leaves);

/// Inclusion proof for leaves[index]. MerkleError when index is out of range.
MerkleProof merkle_prove(const std::vector<Hash256>& leaves, size_t index);

/// True iff folding `leaf` through `proof` reproduces `root`.
bool merkle_verify(const Hash256& root, const Hash256& leaf, const MerkleProof& proof);

} // namespace uavpki::merkle
