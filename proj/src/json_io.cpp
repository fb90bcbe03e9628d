#include "mqmf/json_io.hpp"

#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace mqmf {

namespace {

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string fmt(bool b) { return b ? "true" : "false"; }

std::string rows_json(const Mat& m) {
    std::string out = "[";
    for (int i = 0; i < m.rows; ++i) {
        if (i) out += ",";
        out += "[";
        for (int j = 0; j < m.cols; ++j) {
            if (j) out += ",";
            out += fmt(m(i, j));
        }
        out += "]";
    }
    out += "]";
    return out;
}

std::string coeff_list_json(const MatrixSequence& s) {
    std::string out = "[";
    for (int k = 0; k < s.length(); ++k) {
        if (k) out += ",";
        out += rows_json(s.coeffs[static_cast<size_t>(k)]);
    }
    out += "]";
    return out;
}

using nlohmann::json;

Mat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a matrix (array of rows)");
    const int rows = static_cast<int>(j.size());
    const int cols = static_cast<int>(j.at(0).size());
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j.at(i);
        if (static_cast<int>(row.size()) != cols)
            throw std::invalid_argument("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(i, c) = row.at(c).get<double>();
    }
    return m;
}

MatrixSequence sequence_from(const json& j) {
    const int dim = j.at("dim").get<int>();
    const int offset = j.at("offset").get<int>();
    MatrixSequence s(dim);
    const json& coeffs = j.at("coeffs");
    int k = offset;
    for (const json& c : coeffs) {
        Mat m = mat_from_json(c);
        if (m.rows != dim || m.cols != dim)
            throw std::invalid_argument("coefficient is not dim x dim");
        s.set(k++, m);
    }
    return s.normalize();
}

VectorSignal signal_from(const json& j) {
    const int dim = j.at("dim").get<int>();
    const int offset = j.at("offset").get<int>();
    VectorSignal s(dim);
    int k = offset;
    for (const json& sample : j.at("samples")) {
        std::vector<double> v;
        for (const json& x : sample) v.push_back(x.get<double>());
        if (static_cast<int>(v.size()) != dim)
            throw std::invalid_argument("sample has wrong length");
        s.set(k++, v);
    }
    return s.normalize();
}

json parse(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("malformed JSON input");
    return j;
}

}  // namespace

std::string to_json(const MatrixSequence& s) {
    return "{\"dim\":" + std::to_string(s.dim) + ",\"offset\":" + std::to_string(s.offset) +
           ",\"coeffs\":" + coeff_list_json(s) + "}";
}

std::string to_json(const FilterBank& bank) {
    return "{\"dim\":" + std::to_string(bank.dim) + ",\"A\":" + to_json(bank.A) +
           ",\"B\":" + to_json(bank.B) + "}";
}

std::string to_json(const VectorSignal& s) {
    std::string samples = "[";
    for (size_t k = 0; k < s.samples.size(); ++k) {
        if (k) samples += ",";
        samples += "[";
        for (size_t i = 0; i < s.samples[k].size(); ++i) {
            if (i) samples += ",";
            samples += fmt(s.samples[k][i]);
        }
        samples += "]";
    }
    samples += "]";
    return "{\"dim\":" + std::to_string(s.dim) + ",\"offset\":" + std::to_string(s.offset) +
           ",\"samples\":" + samples + "}";
}

std::string to_json(const std::vector<RotationStep>& steps) {
    std::string out = "[";
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out += ",";
        out += "{\"parity\":" + std::to_string(steps[i].parity) + ",\"M\":" + rows_json(steps[i].M) + "}";
    }
    out += "]";
    return out;
}

std::string to_json(const QmfReport& report) {
    std::string rules = "[";
    for (size_t i = 0; i < report.sum_rule_residuals.size(); ++i) {
        if (i) rules += ",";
        rules += fmt(report.sum_rule_residuals[i]);
    }
    rules += "]";
    return "{\"orthonormality_residual\":" + fmt(report.orthonormality_residual) +
           ",\"full_rank_residual\":" + fmt(report.full_rank_residual) +
           ",\"sum_rule_residuals\":" + rules +
           ",\"orthonormality_pass\":" + fmt(report.orthonormality_pass) +
           ",\"full_rank_pass\":" + fmt(report.full_rank_pass) +
           ",\"sum_rules_pass\":" + fmt(report.sum_rules_pass) + ",\"tol\":" + fmt(report.tol) +
           ",\"moments\":" + std::to_string(report.moments) +
           ",\"all_pass\":" + fmt(report.all_pass()) + "}";
}

std::string to_json(const SolveResult& result) {
    std::string params = "[";
    for (size_t i = 0; i < result.params.size(); ++i) {
        if (i) params += ",";
        params += fmt(result.params[i]);
    }
    params += "]";
    return "{\"residual_norm\":" + fmt(result.residual_norm) +
           ",\"converged\":" + fmt(result.converged) +
           ",\"restarts_used\":" + std::to_string(result.restarts_used) + ",\"params\":" + params +
           "}";
}

std::string to_json(const PeelCertificate& cert) {
    if (!cert.ok()) {
        const BlockObstruction& o = *cert.obstruction;
        return std::string("{\"obstruction\":{\"side\":\"") +
               (o.side == Side::left ? "left" : "right") +
               "\",\"parity\":" + std::to_string(o.parity) +
               ",\"dimension\":" + std::to_string(o.dimension) + "}}";
    }
    return "{\"steps\":" + to_json(cert.steps) +
           ",\"pre_translate\":" + std::to_string(cert.pre_translate) +
           ",\"residual\":" + fmt(cert.residual) + "}";
}

MatrixSequence matrix_sequence_from_json(const std::string& text) {
    return sequence_from(parse(text));
}

FilterBank filter_bank_from_json(const std::string& text) {
    json j = parse(text);
    FilterBank bank(sequence_from(j.at("A")), sequence_from(j.at("B")));
    if (bank.dim != j.at("dim").get<int>())
        throw std::invalid_argument("bank dim does not match filters");
    return bank;
}

VectorSignal vector_signal_from_json(const std::string& text) { return signal_from(parse(text)); }

StepList steps_from_json(const std::string& text) {
    json j = parse(text);
    StepList out;
    const json* arr = &j;
    if (j.is_object()) {
        out.pre_translate = j.value("pre_translate", 0);
        arr = &j.at("steps");
    }
    if (!arr->is_array()) throw std::invalid_argument("expected a step array");
    for (const json& step : *arr) {
        const int parity = step.at("parity").get<int>();
        if (parity != 0 && parity != 1) throw std::invalid_argument("parity must be 0 or 1");
        Mat m = mat_from_json(step.at("M"));
        if (m.rows != m.cols || m.rows % 2 != 0)
            throw std::invalid_argument("step matrix must be 2d x 2d");
        out.steps.push_back({m, parity});
    }
    return out;
}

std::string to_json_signal_pair(const VectorSignal& s0, const VectorSignal& s1) {
    return "{\"s0\":" + to_json(s0) + ",\"s1\":" + to_json(s1) + "}";
}

std::pair<VectorSignal, VectorSignal> signal_pair_from_json(const std::string& text) {
    json j = parse(text);
    return {signal_from(j.at("s0")), signal_from(j.at("s1"))};
}

}  // namespace mqmf
