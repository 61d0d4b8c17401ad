#include "hopfkit/report.hpp"

#include <sstream>

#include <json.hpp>

namespace hopfkit {

Check Check::ok(std::string id, std::string law, std::string detail) {
    Check c;
    c.id = std::move(id);
    c.law = std::move(law);
    c.pass = true;
    c.detail = std::move(detail);
    return c;
}

Check Check::fail(std::string id, std::string law, std::vector<int> witness, std::string detail) {
    Check c;
    c.id = std::move(id);
    c.law = std::move(law);
    c.pass = false;
    c.witness = std::move(witness);
    c.detail = std::move(detail);
    return c;
}

bool Report::ok() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

int Report::passed() const {
    int n = 0;
    for (const auto& c : checks) n += c.pass;
    return n;
}

int Report::failed() const { return (int)checks.size() - passed(); }

Report& Report::merge(const Report& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
    if (other.solution_space_dim) solution_space_dim = other.solution_space_dim;
    return *this;
}

std::string Report::render_json() const {
    nlohmann::ordered_json j;
    j["checks"] = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json e;
        e["id"] = c.id;
        e["law"] = c.law;
        e["verdict"] = c.pass ? "pass" : "fail";
        if (!c.pass) e["witness"] = c.witness;
        if (!c.detail.empty()) e["detail"] = c.detail;
        j["checks"].push_back(e);
    }
    j["summary"] = {{"pass", passed()}, {"fail", failed()}};
    if (solution_space_dim) j["solution_space_dim"] = *solution_space_dim;
    return j.dump(2);
}

std::string Report::render_table() const {
    std::ostringstream os;
    for (const auto& c : checks) {
        os << (c.pass ? "[pass] " : "[FAIL] ") << c.id;
        if (!c.law.empty()) os << "   " << c.law;
        os << "\n";
        if (!c.pass) {
            os << "      ";
            if (!c.witness.empty()) {
                os << " witness (";
                for (size_t i = 0; i < c.witness.size(); ++i) os << (i ? "," : "") << c.witness[i];
                os << ")";
                if (!c.detail.empty()) os << ":";
            }
            if (!c.detail.empty()) os << " " << c.detail;
            os << "\n";
        } else if (!c.detail.empty()) {
            os << "       " << c.detail << "\n";
        }
    }
    os << passed() << " passed, " << failed() << " failed";
    if (solution_space_dim) os << ", solution space dim " << *solution_space_dim;
    os << "\n";
    return os.str();
}

std::string Report::render(const std::string& format) const {
    if (format == "json") return render_json();
    if (format == "table") return render_table();
    throw std::invalid_argument("Report::render: unknown format '" + format + "'");
}

Report Report::parse_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    Report r;
    for (const auto& e : j.at("checks")) {
        Check c;
        c.id = e.at("id").get<std::string>();
        c.law = e.value("law", "");
        c.pass = e.at("verdict").get<std::string>() == "pass";
        if (e.contains("witness")) c.witness = e.at("witness").get<std::vector<int>>();
        c.detail = e.value("detail", "");
        r.checks.push_back(std::move(c));
    }
    if (j.contains("solution_space_dim")) r.solution_space_dim = j.at("solution_space_dim").get<int>();
    // summary is derived; reject documents whose counts disagree
    if (j.contains("summary")) {
        if (j["summary"].value("pass", r.passed()) != r.passed() ||
            j["summary"].value("fail", r.failed()) != r.failed())
            throw std::invalid_argument("Report::parse_json: summary counts disagree with checks");
    }
    return r;
}

std::string render_vector(const Matrix& column) {
    std::ostringstream os;
    os << "[";
    for (int i = 0; i < column.rows(); ++i) os << (i ? ", " : "") << column(i, 0).str();
    os << "]";
    return os.str();
}

Check compare_maps(const std::string& id, const std::string& law, const Matrix& lhs,
                   const Matrix& rhs, const std::vector<int>& input_shape) {
    if (lhs.rows() != rhs.rows() || lhs.cols() != rhs.cols())
        return Check::fail(id, law, {}, "shape mismatch: " + std::to_string(lhs.rows()) + "x" +
                                            std::to_string(lhs.cols()) + " vs " +
                                            std::to_string(rhs.rows()) + "x" +
                                            std::to_string(rhs.cols()));
    for (int j = 0; j < lhs.cols(); ++j) {
        bool equal = true;
        for (int i = 0; i < lhs.rows(); ++i)
            if (lhs(i, j) != rhs(i, j)) {
                equal = false;
                break;
            }
        if (equal) continue;
        // decode column j into the source basis tuple
        std::vector<int> witness;
        int rem = j;
        for (int t = (int)input_shape.size() - 1; t >= 0; --t) {
            witness.insert(witness.begin(), rem % input_shape[t]);
            rem /= input_shape[t];
        }
        return Check::fail(id, law, witness,
                           "lhs = " + render_vector(lhs.col(j)) + ", rhs = " + render_vector(rhs.col(j)));
    }
    return Check::ok(id, law);
}

}  // namespace hopfkit
