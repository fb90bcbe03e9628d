#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "mqmf/qmf.hpp"
#include "mqmf/rotations.hpp"

namespace mqmf {

enum class Side { left, right };

struct BlockObstruction {
    Side side = Side::left;
    int parity = 0;
    int dimension = 0;  // measured rank of the outermost block
};

/// An outermost block fails the rank-d hypothesis of the peeling induction.
class ObstructionError : public std::runtime_error {
  public:
    explicit ObstructionError(const BlockObstruction& info);
    BlockObstruction info;
};

/// The input is not QMF to the required tolerance (or a peel failed to
/// annihilate the outer half-blocks).
class OrthogonalityError : public std::runtime_error {
  public:
    explicit OrthogonalityError(const std::string& what) : std::runtime_error(what) {}
};

/// Rank of the outermost block of the chosen parity covering: the vector
/// space spanned by the 2d columns of [[A(m), B(m)], [A(m+1), B(m+1)]] for
/// the block (m, m+1) at the left or right end of the combined support.
int block_dimension(const FilterBank& bank, Side side, int parity);

struct PeelResult {
    FilterBank reduced;
    RotationStep step;  // apply_step(reduced, step) == bank
};

/// One peel: maps the left outer block's column space into the lower d
/// coordinates and the right block's into the upper d, shrinking the support
/// by exactly 2. Requires both outer blocks of the chosen parity to be full
/// (length even, support ends aligned with the covering).
PeelResult peel_once(const FilterBank& bank, int parity);

struct PeelCertificate {
    std::vector<RotationStep> steps;  // in construct order
    /// construct(steps) equals translate(bank, pre_translate); 0 for banks
    /// produced by construct, +-1 when only a shifted copy is constructible.
    int pre_translate = 0;
    double residual = 0.0;
    std::optional<BlockObstruction> obstruction;

    bool ok() const { return !obstruction.has_value(); }
};

/// Full factorization: peel until length 2, then align to the Haar seed.
/// Throws OrthogonalityError for non-QMF input; block-rank failures are
/// reported in the certificate instead of thrown.
PeelCertificate factorize(const FilterBank& bank, double tol = 1e-8);

}  // namespace mqmf
