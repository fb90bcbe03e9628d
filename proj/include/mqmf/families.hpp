#pragma once

#include <string>
#include <vector>

#include "mqmf/qmf.hpp"

namespace mqmf {

/// One- and two-parameter closed-form d = 2 filter families. Parameters are
/// restricted to [-1, 1]; out-of-range values throw std::domain_error.
FilterBank family_first(double a);
FilterBank family_second(double a);
FilterBank family_diagonal(double a);
FilterBank family_fourth(double a, double b);

FilterBank family_by_tag(const std::string& tag, double a, double b);

/// Mirror companion P A(-z) P with P = diag(1, -1, ..., +-1).
MatrixSequence mirror_filter(const MatrixSequence& a);

/// Golden fixtures: per-tap table evaluators, kept independent of the
/// family_* constructors above so the two routes can be tested against each
/// other.
namespace fixtures {

/// The length-6 numeric bank from the twelve-condition Givens solve.
FilterBank reference_bank();

struct TapTable {
    std::vector<Mat> a;  // A(0), A(1), ...
    std::vector<Mat> b;
};

TapTable first_family_taps(double a);
/// Entries are 4 A(k) and 4 B(k), as tabulated.
TapTable second_family_taps(double a);
TapTable fourth_family_taps(double a, double b);

}  // namespace fixtures

}  // namespace mqmf
