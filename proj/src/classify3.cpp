#include "cornerlab/classify3.hpp"

#include <algorithm>

namespace cornerlab {

std::string to_string(ClassTag t) {
    switch (t) {
        case ClassTag::FULL: return "FULL";
        case ClassTag::UNITIZED_LR: return "UNITIZED_LR";
        case ClassTag::EX_3_1_1: return "EX_3_1_1";
        case ClassTag::EX_3_1_2: return "EX_3_1_2";
        case ClassTag::EX_3_1_6: return "EX_3_1_6";
        case ClassTag::EX_3_2_2: return "EX_3_2_2";
        case ClassTag::EX_3_2_5: return "EX_3_2_5";
        case ClassTag::EX_3_2_9: return "EX_3_2_9";
        case ClassTag::CLASS_B: return "CLASS_B";
        case ClassTag::CLASS_C: return "CLASS_C";
        case ClassTag::CLASS_D: return "CLASS_D";
        case ClassTag::SCALAR: return "SCALAR";
    }
    return "?";
}

bool is_compressible(ClassTag t) {
    return t != ClassTag::CLASS_B && t != ClassTag::CLASS_C && t != ClassTag::CLASS_D;
}

namespace {

using Supports = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

/// Supports seen through the anti-transpose, which maps block i to 2 - i.
Supports anti_transposed(const Supports& s) {
    Supports out;
    for (const auto& [key, dim] : s) out[{2 - key.second, 2 - key.first}] = dim;
    return out;
}

ClassTag case_all_unlinked(std::size_t rad, const Supports& sup) {
    switch (rad) {
        case 0: return ClassTag::CLASS_D;
        case 1: return ClassTag::EX_3_2_2;
        case 2:
            // Two nonzero outer supports would force Q1 Rad Q3 != 0 by multiplication.
            if (sup.at({0, 2}) == 0) throw InternalError("radical of dimension 2 misses the (1,3) corner");
            return ClassTag::EX_3_1_2;
        case 3: return ClassTag::EX_3_1_1;
    }
    throw InternalError("radical dimension out of range for M_3");
}

/// pair is the linked pair after normalization: {0, 1} or {0, 2}.
ClassTag case_one_pair(std::size_t rad, bool pair02, const Supports& sup) {
    switch (rad) {
        case 0: return ClassTag::UNITIZED_LR;
        case 1:
            if (pair02)
                return sup.at({0, 2}) == 1 && sup.at({0, 1}) == 0 && sup.at({1, 2}) == 0 ? ClassTag::CLASS_B
                                                                                             : ClassTag::UNITIZED_LR;
            return sup.at({0, 1}) > 0 ? ClassTag::CLASS_B : ClassTag::UNITIZED_LR;
        case 2:
            if (pair02) return ClassTag::EX_3_2_5;
            if (sup.at({0, 1}) == 0) return ClassTag::UNITIZED_LR;
            if (sup.at({1, 2}) != 0) throw InternalError("remaining radical generator has a nonzero (2,3) entry");
            return ClassTag::EX_3_2_5;
        case 3: return pair02 ? ClassTag::UNITIZED_LR : ClassTag::EX_3_1_6;
    }
    throw InternalError("radical dimension out of range for M_3");
}

ClassTag case_all_linked(std::size_t rad, const Supports& sup) {
    switch (rad) {
        case 0: return ClassTag::SCALAR;
        case 1: return ClassTag::UNITIZED_LR;
        case 2:
            return sup.at({0, 1}) == 0 || sup.at({1, 2}) == 0 ? ClassTag::UNITIZED_LR : ClassTag::CLASS_C;
        case 3: return ClassTag::EX_3_2_9;
    }
    throw InternalError("radical dimension out of range for M_3");
}

}  // namespace

ClassLabel classify(const Span& s) {
    if (!s.is_square() || s.n() != 3) throw PreconditionError("classify works on subalgebras of M_3");
    if (!s.is_mult_closed()) throw PreconditionError("input is not multiplicatively closed");
    if (!s.contains(Mat::identity(3))) throw PreconditionError("input is not unital");

    const BlockForm bf = unhinge(triangularize(s));
    ClassLabel label;
    ClassEvidence& ev = label.evidence;
    ev.block_dims = bf.block_dims;
    ev.bd_dim = bf.block_diagonal.dim();
    ev.radical_dim = bf.radical.dim();
    ev.linked_partition = bf.linked_partition;
    ev.supports = radical_block_supports(bf);
    ev.similarity = bf.similarity;

    if (bf.blocks() == 1) {
        label.tag = ClassTag::FULL;
    } else if (bf.blocks() == 2) {
        label.tag = ClassTag::UNITIZED_LR;
    } else {
        const std::size_t groups = bf.linked_partition.size();
        if (groups != ev.bd_dim) throw InternalError("dim BD differs from the number of linked groups");
        if (groups == 3) {
            label.tag = case_all_unlinked(ev.radical_dim, ev.supports);
        } else if (groups == 1) {
            label.tag = case_all_linked(ev.radical_dim, ev.supports);
        } else {
            auto pair = *std::find_if(bf.linked_partition.begin(), bf.linked_partition.end(),
                                      [](const auto& g) { return g.size() == 2; });
            if (pair == std::vector<std::size_t>{1, 2}) {
                label.transposed = true;
                ev.supports = anti_transposed(ev.supports);
                pair = {0, 1};
            }
            label.tag = case_one_pair(ev.radical_dim, pair == std::vector<std::size_t>{0, 2}, ev.supports);
        }
    }
    label.compressible = is_compressible(label.tag);
    return label;
}

CrossValidation cross_validate(const Span& s, const SampleConfig& cfg) {
    CrossValidation cv;
    cv.label = classify(s);
    cv.projection = falsify(s, Mode::projection, cfg);
    cv.idempotent = falsify(s, Mode::idempotent, cfg);
    const bool proj_found = cv.projection.verdict == CornerReport::Verdict::counterexample;
    const bool idem_found = cv.idempotent.verdict == CornerReport::Verdict::counterexample;
    cv.consistent = cv.label.compressible ? !proj_found && !idem_found : proj_found;
    return cv;
}

}  // namespace cornerlab
