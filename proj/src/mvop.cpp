#include "gelfand/mvop.hpp"

#include <Eigen/Eigenvalues>
#include "json.hpp"

#include <regex>

namespace gelfand::mvop {

std::vector<double> tridiagonal_eigenvalues(const std::vector<double>& diag, const std::vector<double>& off) {
    const auto n = static_cast<Eigen::Index>(diag.size());
    Eigen::VectorXd d(n), e(n > 0 ? n - 1 : 0);
    for (Eigen::Index i = 0; i < n; ++i) d(i) = diag[i];
    for (Eigen::Index i = 0; i + 1 < n; ++i) e(i) = off[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
    es.computeFromTridiagonal(d, e, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw std::runtime_error("tridiagonal eigen-solve did not converge");
    return {es.eigenvalues().data(), es.eigenvalues().data() + n};
}

Exact parse_exact(const std::string& s) {
    using boost::multiprecision::cpp_int;
    static const std::regex frac(R"(\s*([+-]?\d+)\s*/\s*(\d+)\s*)");
    static const std::regex dec(R"(\s*([+-]?)(\d*)(?:\.(\d*))?(?:[eE]([+-]?\d+))?\s*)");
    std::smatch m;
    if (std::regex_match(s, m, frac)) {
        if (m[2].str().find_first_not_of('0') == std::string::npos) throw schema_error("zero denominator in '" + s + "'");
        std::string num = m[1].str();
        const bool neg = !num.empty() && num[0] == '-';
        if (!num.empty() && (num[0] == '-' || num[0] == '+')) num.erase(0, 1);
        num.erase(0, num.find_first_not_of('0'));
        std::string d = m[2].str();
        d.erase(0, d.find_first_not_of('0'));
        const Exact q(cpp_int(num.empty() ? "0" : num), cpp_int(d));
        return neg ? Exact(-q) : q;
    }
    if (std::regex_match(s, m, dec) && (m[2].length() > 0 || m[3].length() > 0)) {
        // Leading zeros would make cpp_int read the string as octal.
        std::string digits = m[2].str() + m[3].str();
        digits.erase(0, digits.find_first_not_of('0'));
        Exact q(cpp_int(digits.empty() ? "0" : digits));
        long long exp = m[4].matched ? std::stoll(m[4].str()) : 0;
        exp -= static_cast<long long>(m[3].length());
        if (exp > 4000 || exp < -4000) throw schema_error("exponent out of range in '" + s + "'");
        const cpp_int p = boost::multiprecision::pow(cpp_int(10), static_cast<unsigned>(exp < 0 ? -exp : exp));
        q = exp < 0 ? q / Exact(p) : q * Exact(p);
        return m[1].str() == "-" ? Exact(-q) : q;
    }
    throw schema_error("not a rational or decimal number: '" + s + "'");
}

namespace {

using nlohmann::json;

Exact number(const json& v, const std::string& where) {
    if (v.is_string()) return parse_exact(v.get<std::string>());
    if (v.is_number_integer() || v.is_number_unsigned() || v.is_number_float()) return parse_exact(v.dump());
    throw schema_error(where + ": expected a number or a numeric string");
}

ExactComplex entry(const json& v, const std::string& where) {
    if (v.is_object()) {
        for (const auto& [k, _] : v.items())
            if (k != "re" && k != "im") throw schema_error(where + ": unknown key '" + k + "'");
        ExactComplex z;
        if (v.contains("re")) z.re = number(v["re"], where + ".re");
        if (v.contains("im")) z.im = number(v["im"], where + ".im");
        return z;
    }
    return {number(v, where), Exact(0)};
}

}  // namespace

WeightSpec parse_weight_spec(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw schema_error(std::string("weight file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw schema_error("weight file must be a JSON object");
    for (const auto& [k, _] : doc.items())
        if (k != "N" && k != "alpha" && k != "beta" && k != "D" && k != "T" && k != "name" && k != "comment")
            throw schema_error("unknown key '" + k + "'");
    for (const char* k : {"N", "alpha", "beta", "D", "T"})
        if (!doc.contains(k)) throw schema_error(std::string("missing key '") + k + "'");

    WeightSpec spec;
    if (!doc["N"].is_number_integer() || doc["N"].get<long long>() < 1 || doc["N"].get<long long>() > 64)
        throw schema_error("N must be an integer in 1..64");
    spec.N = doc["N"].get<int>();
    const auto n = static_cast<size_t>(spec.N);
    spec.alpha = number(doc["alpha"], "alpha");
    spec.beta = number(doc["beta"], "beta");

    const auto& d = doc["D"];
    if (!d.is_array() || d.size() != n) throw schema_error("D must be an array of N numbers");
    for (size_t i = 0; i < n; ++i) spec.D.push_back(number(d[i], "D[" + std::to_string(i) + "]"));

    const auto& t = doc["T"];
    if (!t.is_array() || t.empty()) throw schema_error("T must be a non-empty array of N x N coefficient matrices");
    for (size_t k = 0; k < t.size(); ++k) {
        const std::string where = "T[" + std::to_string(k) + "]";
        if (!t[k].is_array() || t[k].size() != n) throw schema_error(where + " must have N rows");
        std::vector<ExactComplex> c;
        for (size_t i = 0; i < n; ++i) {
            const auto& row = t[k][i];
            if (!row.is_array() || row.size() != n) throw schema_error(where + " rows must have N entries");
            for (size_t j = 0; j < n; ++j)
                c.push_back(entry(row[j], where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]"));
        }
        spec.T.push_back(std::move(c));
    }
    return spec;
}

}  // namespace gelfand::mvop
