#include "rmtsf/io.hpp"

#include <vector>

namespace rmtsf {

namespace {

nlohmann::json coeffs_json(const std::vector<std::pair<int, Rational>>& terms) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [e, c] : terms) coeffs[std::to_string(e)] = to_string(c);
    return nlohmann::json{{"var", "N"}, {"coeffs", coeffs}};
}

std::vector<std::pair<int, Rational>> coeffs_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("coeffs"))
        throw std::invalid_argument("polynomial JSON: expected {\"var\",\"coeffs\"}");
    std::vector<std::pair<int, Rational>> out;
    for (const auto& [key, value] : j.at("coeffs").items())
        out.emplace_back(std::stoi(key), parse_rational(value.get<std::string>()));
    return out;
}

std::string render(const std::vector<std::pair<int, Rational>>& terms_desc) {
    if (terms_desc.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_desc) {
        Rational a = c < 0 ? -c : c;
        if (first) {
            out += (c < 0) ? "-" : "";
            first = false;
        } else {
            out += (c < 0) ? " - " : " + ";
        }
        std::string head;
        if (e == 0) {
            head = to_string(a);
        } else {
            std::string power = e == 1 ? "N" : "N^" + std::to_string(e);
            head = (a == 1) ? power : to_string(a) + "*" + power;
        }
        out += head;
    }
    return out;
}

}  // namespace

nlohmann::json poly_to_json(const PolyN& p) {
    std::vector<std::pair<int, Rational>> terms;
    for (int k = 0; k <= p.degree(); ++k)
        if (p.coeff(static_cast<unsigned>(k)) != 0)
            terms.emplace_back(k, p.coeff(static_cast<unsigned>(k)));
    return coeffs_json(terms);
}

nlohmann::json laurent_to_json(const LaurentPolyN& p) {
    std::vector<std::pair<int, Rational>> terms(p.coeffs().begin(), p.coeffs().end());
    return coeffs_json(terms);
}

PolyN poly_from_json(const nlohmann::json& j) {
    PolyN p;
    for (const auto& [e, c] : coeffs_from_json(j)) {
        if (e < 0) throw std::invalid_argument("PolyN JSON: negative exponent");
        std::vector<Rational> mono(static_cast<size_t>(e) + 1, Rational(0));
        mono.back() = c;
        p += PolyN::from_coeffs(std::move(mono));
    }
    return p;
}

LaurentPolyN laurent_from_json(const nlohmann::json& j) {
    LaurentPolyN p;
    for (const auto& [e, c] : coeffs_from_json(j)) p += LaurentPolyN::term(c, e);
    return p;
}

std::string poly_to_text(const PolyN& p) {
    std::vector<std::pair<int, Rational>> terms;
    for (int k = p.degree(); k >= 0; --k)
        if (p.coeff(static_cast<unsigned>(k)) != 0)
            terms.emplace_back(k, p.coeff(static_cast<unsigned>(k)));
    return render(terms);
}

std::string laurent_to_text(const LaurentPolyN& p) {
    std::vector<std::pair<int, Rational>> terms(p.coeffs().rbegin(), p.coeffs().rend());
    return render(terms);
}

}  // namespace rmtsf
