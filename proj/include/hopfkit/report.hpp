#ifndef HOPFKIT_REPORT_HPP
#define HOPFKIT_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "hopfkit/matrix.hpp"

namespace hopfkit {

/// One verified identity: which law, at which basis tuple it first failed
/// (if it failed), and the two exactly evaluated sides so a failure can be
/// reproduced by hand.
struct Check {
    std::string id;                 // e.g. "algebra.assoc"
    std::string law;                // the identity, e.g. "(ab)c = a(bc)"
    bool pass = true;
    std::vector<int> witness;       // basis multi-index of the first failure
    std::string detail;             // exact lhs/rhs at the witness, or notes

    static Check ok(std::string id, std::string law, std::string detail = "");
    static Check fail(std::string id, std::string law, std::vector<int> witness,
                      std::string detail);
};

/// Structured verification outcome; never a bare boolean.
struct Report {
    std::vector<Check> checks;
    std::optional<int> solution_space_dim;  // solver metadata, when relevant

    bool ok() const;
    int passed() const;
    int failed() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    Report& merge(const Report& other);

    std::string render_json() const;
    std::string render_table() const;
    std::string render(const std::string& format) const;
    static Report parse_json(const std::string& text);
};

/// Compare two linear maps and report; the witness decodes the first
/// differing column into the given input shape (basis tuple of the source).
Check compare_maps(const std::string& id, const std::string& law, const Matrix& lhs,
                   const Matrix& rhs, const std::vector<int>& input_shape);

std::string render_vector(const Matrix& column);

}  // namespace hopfkit

#endif
