#ifndef SEMI2X2_JSON_IO_HPP
#define SEMI2X2_JSON_IO_HPP

#include <json.hpp>

#include "semi2x2/matrix.hpp"

namespace semi2x2 {

// JSON mirror of the canonical text form: an array of {coeff, monomial} with
// exact decimal coefficients and [variable, exponent] pairs, in the same
// descending term order the text form uses.
inline nlohmann::json polynomial_to_json(const Polynomial& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto it = f.terms().rbegin(); it != f.terms().rend(); ++it) {
        nlohmann::json mono = nlohmann::json::array();
        for (const auto& [v, e] : it->first.factors()) mono.push_back({v.str(), e});
        terms.push_back({{"coeff", it->second.str()}, {"monomial", mono}});
    }
    return terms;
}

inline Polynomial polynomial_from_json(const nlohmann::json& doc, const Ring& ring) {
    Polynomial out(ring);
    for (const auto& term : doc) {
        mpq_class q(term.at("coeff").get<std::string>());
        q.canonicalize();
        std::vector<std::pair<VariableId, unsigned>> factors;
        for (const auto& f : term.at("monomial"))
            factors.push_back({VariableId::parse(f.at(0).get<std::string>()), f.at(1).get<unsigned>()});
        out = out + Polynomial::term(Scalar(ring, q), Monomial::from_factors(std::move(factors)));
    }
    return out;
}

// Matrices serialize as JSON arrays of canonical polynomial strings.
inline nlohmann::json matrix_to_json(const GenericMatrix& a) {
    nlohmann::json rows = nlohmann::json::array();
    for (int r = 1; r <= a.rows(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (int c = 1; c <= a.cols(); ++c) row.push_back(a.at(r, c).str());
        rows.push_back(row);
    }
    return rows;
}

inline GenericMatrix matrix_from_json(const nlohmann::json& doc, const Ring& ring) {
    int rows = static_cast<int>(doc.size());
    int cols = rows > 0 ? static_cast<int>(doc.at(0).size()) : 0;
    GenericMatrix out(ring, rows, cols);
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c)
            out.set(r + 1, c + 1, Polynomial::parse(doc.at(r).at(c).get<std::string>(), ring));
    return out;
}

}  // namespace semi2x2

#endif
