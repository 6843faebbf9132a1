#pragma once

/**
 * @file classify3.hpp
 * @brief Classification of unital subalgebras of M_3 up to transpose
 * similarity, and the compressibility verdict attached to each class.
 *
 * The decision reads only similarity-stable invariants of an unhinged
 * reduced form: block sizes, dim BD, the linked partition, dim Rad and the
 * dimensions of the radical's block supports.
 */

#include "cornerlab/compress.hpp"
#include "cornerlab/structure.hpp"

#include <map>
#include <string>
#include <vector>

namespace cornerlab {

enum class ClassTag {
    FULL,
    UNITIZED_LR,
    EX_3_1_1,
    EX_3_1_2,
    EX_3_1_6,
    EX_3_2_2,
    EX_3_2_5,
    EX_3_2_9,
    CLASS_B,
    CLASS_C,
    CLASS_D,
    SCALAR,
};

std::string to_string(ClassTag t);
bool is_compressible(ClassTag t);

struct ClassEvidence {
    std::vector<std::size_t> block_dims;
    std::size_t bd_dim = 0;
    std::size_t radical_dim = 0;
    std::vector<std::vector<std::size_t>> linked_partition;  ///< 0-based block indices
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> supports;  ///< after any anti-transposition
    Mat similarity = Mat(1, 1);
};

struct ClassLabel {
    ClassTag tag = ClassTag::SCALAR;
    bool compressible = true;
    bool transposed = false;
    ClassEvidence evidence;
};

/// Requires a unital, multiplicatively closed span in M_3 (PreconditionError).
ClassLabel classify(const Span& s);

struct CrossValidation {
    ClassLabel label;
    CornerReport projection;
    CornerReport idempotent;
    bool consistent = false;
};

/// classify() plus falsify() in both modes; compressible labels must yield no
/// counterexample and the B, C, D classes must yield a projection counterexample.
CrossValidation cross_validate(const Span& s, const SampleConfig& cfg);

}  // namespace cornerlab
