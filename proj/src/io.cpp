#include "ldnc/io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace ldnc {

Gf2Matrix read_matrix(std::istream& in) {
    long long rows = -1, cols = -1;
    std::string header;
    if (!std::getline(in, header)) throw std::runtime_error("matrix: missing header line");
    {
        std::istringstream hs(header);
        std::string extra;
        if (!(hs >> rows >> cols) || (hs >> extra) || rows < 0 || cols < 0)
            throw std::runtime_error("matrix: header must be \"R C\" with R, C >= 0");
    }
    Gf2Matrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
    for (long long r = 0; r < rows; ++r) {
        std::string line;
        if (!std::getline(in, line)) throw std::runtime_error("matrix: missing row line");
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (static_cast<long long>(line.size()) != cols)
            throw std::runtime_error("matrix: row has wrong length");
        for (long long c = 0; c < cols; ++c) {
            if (line[c] != '0' && line[c] != '1')
                throw std::runtime_error("matrix: entries must be 0 or 1");
            m.set(r, c, line[c] == '1');
        }
    }
    return m;
}

Gf2Matrix read_matrix_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Gf2Matrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) out << (m.get(r, c) ? '1' : '0');
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, const Gf2Matrix& m) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    write_matrix(out, m);
    if (!out) throw std::runtime_error("write failed: " + path);
}

nlohmann::json to_json(const NetworkParams& p) {
    return {{"n1", p.n1}, {"n2", p.n2}, {"n3", p.n3}, {"n4", p.n4}, {"m", p.m}, {"q", p.q()}};
}

nlohmann::json to_json(const CapacityReport& r) {
    nlohmann::json terms = nlohmann::json::object();
    for (const auto& [name, v] : r.bound_terms) terms[name] = v;
    nlohmann::json j = {
        {"params", to_json(r.params)},
        {"case", to_string(r.regime.id)},
        {"swapped", r.regime.swapped},
        {"capacity", r.capacity},
        {"bound_terms", terms},
        {"cut", r.cut},
    };
    j["k"] = r.k ? nlohmann::json(*r.k) : nlohmann::json();
    j["j"] = r.j ? nlohmann::json(*r.j) : nlohmann::json();
    return j;
}

nlohmann::json to_json(const VerificationReport& r) {
    nlohmann::json mismatches = nlohmann::json::array();
    for (const auto& mm : r.mismatches)
        mismatches.push_back({{"params", to_json(mm.params)},
                              {"closed_form", mm.closed_form},
                              {"brute_force", mm.brute_force}});
    nlohmann::json skipped = nlohmann::json::array();
    for (const auto& p : r.skipped) skipped.push_back(to_json(p));
    // elapsed_seconds is deliberately absent: reports must be
    // byte-identical across runs.
    return {{"max_gain", r.max_gain},
            {"bit_budget", r.bit_budget},
            {"total_points", r.total_points},
            {"mismatches", mismatches},
            {"skipped", skipped},
            {"passed", r.passed()}};
}

}  // namespace ldnc
