#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "holotor/form.hpp"
#include "holotor/frame.hpp"

namespace holotor {

/// A frame algebra together with its coframe names, as stored in frame files.
struct FrameFile {
    FrameAlgebra frame;
    std::vector<std::string> coframe;
};

/// Frame file format (one document per frame):
/// {
///   "dim": 6,
///   "coframe": ["e1", ..., "e6"],
///   "d": { "e1": [["sqrt(10)/4", "e1^e6"]], ... }
/// }
/// Coefficients use the exact-scalar literal grammar; monomials use the
/// "e1^e6" style against the declared coframe names. Omitted coframe names in
/// "d" mean a vanishing differential.
inline FrameFile parse_frame(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("frame file: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("dim") || !doc.contains("coframe"))
        throw std::invalid_argument("frame file: expected an object with 'dim' and 'coframe'");
    int dim = doc.at("dim").get<int>();
    if (dim < 1 || dim > 12) throw std::invalid_argument("frame file: dim out of range");
    std::vector<std::string> coframe = doc.at("coframe").get<std::vector<std::string>>();
    if (static_cast<int>(coframe.size()) != dim)
        throw std::invalid_argument("frame file: coframe size does not match dim");

    std::vector<Form<Exact>> d(dim, Form<Exact>(dim, 2));
    if (doc.contains("d")) {
        for (const auto& [key, terms] : doc.at("d").items()) {
            int idx = -1;
            for (int i = 0; i < dim; ++i)
                if (coframe[i] == key) idx = i;
            if (idx < 0) throw std::invalid_argument("frame file: unknown coframe element '" + key + "'");
            for (const auto& pair : terms) {
                if (!pair.is_array() || pair.size() != 2)
                    throw std::invalid_argument("frame file: each term must be [coefficient, monomial]");
                Exact c = parse_exact(pair[0].get<std::string>());
                Monomial m = parse_monomial(pair[1].get<std::string>(), coframe);
                if (detail::popcount(m) != 2)
                    throw std::invalid_argument("frame file: differential terms must be degree 2");
                d[idx].add_term(m, c);
            }
        }
    }
    return FrameFile{FrameAlgebra(dim, std::move(d)), std::move(coframe)};
}

/// Canonical serialization: keys ordered by coframe index, term lists ordered
/// by monomial mask, coefficients in canonical literal form. parse ∘ serialize
/// is the identity bit for bit.
inline std::string serialize_frame(const FrameFile& f) {
    nlohmann::ordered_json doc;
    doc["dim"] = f.frame.dim;
    doc["coframe"] = f.coframe;
    nlohmann::ordered_json d = nlohmann::ordered_json::object();
    for (int i = 0; i < f.frame.dim; ++i) {
        const Form<Exact>& di = f.frame.d_coframe[i];
        if (di.coeffs.empty()) continue;
        nlohmann::ordered_json terms = nlohmann::ordered_json::array();
        for (const auto& [m, c] : di.coeffs) {
            std::string name;
            for (int k : monomial_indices(m)) {
                if (!name.empty()) name += "^";
                name += f.coframe[k - 1];
            }
            terms.push_back({to_string(c), name});
        }
        d[f.coframe[i]] = std::move(terms);
    }
    doc["d"] = std::move(d);
    return doc.dump(2) + "\n";
}

inline FrameFile load_frame_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open frame file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_frame(ss.str());
}

inline void save_frame_file(const std::string& path, const FrameFile& f) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot write frame file '" + path + "'");
    out << serialize_frame(f);
}

inline std::vector<std::string> default_coframe(int dim, const std::string& prefix = "e") {
    std::vector<std::string> out;
    for (int i = 1; i <= dim; ++i) out.push_back(prefix + std::to_string(i));
    return out;
}

}  // namespace holotor
