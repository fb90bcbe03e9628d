#pragma once

#include <string>
#include <vector>

#include "mqmf/factorize.hpp"
#include "mqmf/localsolve.hpp"
#include "mqmf/qmf.hpp"
#include "mqmf/rotations.hpp"

namespace mqmf {

/// Wire formats. Emission is hand-rolled with fixed key order and
/// 17-significant-digit decimal floats so that pipelined JSON round-trips
/// byte-identically; parsing is delegated to nlohmann/json. Parse errors
/// throw std::invalid_argument.

std::string to_json(const MatrixSequence& s);
std::string to_json(const FilterBank& bank);
std::string to_json(const VectorSignal& s);
std::string to_json(const std::vector<RotationStep>& steps);
std::string to_json(const QmfReport& report);
std::string to_json(const SolveResult& result);
std::string to_json(const PeelCertificate& cert);

MatrixSequence matrix_sequence_from_json(const std::string& text);
FilterBank filter_bank_from_json(const std::string& text);
VectorSignal vector_signal_from_json(const std::string& text);

struct StepList {
    std::vector<RotationStep> steps;
    int pre_translate = 0;
};

/// Accepts either a bare step array or the factorize certificate object.
StepList steps_from_json(const std::string& text);

/// Signal pair produced by `analyze`, consumed by `synthesize`.
std::string to_json_signal_pair(const VectorSignal& s0, const VectorSignal& s1);
std::pair<VectorSignal, VectorSignal> signal_pair_from_json(const std::string& text);

}  // namespace mqmf
