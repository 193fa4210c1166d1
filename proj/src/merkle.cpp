#include "uavpki/merkle.hpp"

#include "uavpki/crypto.hpp"
#include "uavpki/errors.hpp"

namespace uavpki::merkle {

size_t tree_levels(size_t leaf_count) {
    size_t levels = 0;
    while (leaf_count > 1) {
        leaf_count = (leaf_count + 1) / 2;
        ++levels;
    }
    return levels;
}

Hash256 node_hash(const Hash256& left, const Hash256& right) {
    std::array<uint8_t, 64> buf;
    std::copy(left.bytes.begin(), left.bytes.end(), buf.begin());
    std::copy(right.bytes.begin(), right.bytes.end(), buf.begin() + 32);
    return crypto::sha256(BytesView(buf.data(), buf.size()));
}

Hash256 merkle_root(const std::vector<Hash256>& leaves) {
    if (leaves.empty())
        raise(ErrorCode::MerkleError, "no leaves");
    std::vector<Hash256> level = leaves;
    while (level.size() > 1) {
        std::vector<Hash256> next;
        next.reserve((level.size() + 1) / 2);
        for (size_t i = 0; i < level.size(); i += 2) {
            const Hash256& left = level[i];
            const Hash256& right = (i + 1 < level.size()) ? level[i + 1] : level[i];
            next.push_back(node_hash(left, right));
        }
        level = std::move(next);
    }
    return level[0];
}

MerkleProof merkle_prove(const std::vector<Hash256>& leaves, size_t index) {
    if (leaves.empty())
        raise(ErrorCode::MerkleError, "no leaves");
    if (index >= leaves.size())
        raise(ErrorCode::MerkleError, "leaf index out of range");

    MerkleProof proof;
    proof.leaf_index = static_cast<uint32_t>(index);
    std::vector<Hash256> level = leaves;
    size_t pos = index;
    while (level.size() > 1) {
        size_t sib = pos ^ 1;
        proof.siblings.push_back(sib < level.size() ? level[sib] : level[pos]);
        std::vector<Hash256> next;
        next.reserve((level.size() + 1) / 2);
        for (size_t i = 0; i < level.size(); i += 2) {
            const Hash256& left = level[i];
            const Hash256& right = (i + 1 < level.size()) ? level[i + 1] : level[i];
            next.push_back(node_hash(left, right));
        }
        level = std::move(next);
        pos >>= 1;
    }
    return proof;
}

bool merkle_verify(const Hash256& root, const Hash256& leaf, const MerkleProof& proof) {
    const size_t levels = proof.siblings.size();
    if (levels >= 32)
        return false;
    if (proof.leaf_index >= (uint64_t(1) << levels))
        return false;

    Hash256 current = leaf;
    uint32_t pos = proof.leaf_index;
    for (const Hash256& sibling : proof.siblings) {
        if (pos & 1) {
            // A self-paired node is always the left input, so a right-side
            // fold with an identical sibling cannot come from an honest tree.
            if (sibling == current)
                return false;
            current = node_hash(sibling, current);
        } else {
            current = node_hash(current, sibling);
        }
        pos >>= 1;
    }
    return current == root;
}

} // namespace uavpki::merkle
