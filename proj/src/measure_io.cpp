#include "opuckit/measure_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <stdexcept>

namespace opuckit {

namespace {

double parseReal(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("complex literal: empty component");
    const char* begin = s.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end != begin + s.size())
        throw std::invalid_argument("complex literal: bad number '" + s + "'");
    return v;
}

std::string formatReal(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace

Complex parseComplex(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    if (s.empty()) throw std::invalid_argument("complex literal: empty");
    if (s.back() != 'i') return Complex(parseReal(s), 0.0);
    s.pop_back();  // imaginary part present
    // Split at the last +/- that is not a leading sign or an exponent sign.
    size_t split = std::string::npos;
    for (size_t k = s.size(); k-- > 1;) {
        if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
            split = k;
            break;
        }
    }
    if (split == std::string::npos) {
        std::string im = s;
        if (im.empty() || im == "+") im = "1";
        else if (im == "-") im = "-1";
        return Complex(0.0, parseReal(im));
    }
    std::string im = s.substr(split);
    if (im == "+") im = "1";
    else if (im == "-") im = "-1";
    return Complex(parseReal(s.substr(0, split)), parseReal(im));
}

std::string formatComplex(Complex z) {
    if (z.imag() == 0.0) return formatReal(z.real());
    if (z.real() == 0.0) return formatReal(z.imag()) + "i";
    std::string out = formatReal(z.real());
    if (z.imag() >= 0.0) out += "+";
    return out + formatReal(z.imag()) + "i";
}

namespace {

Complex complexField(const nlohmann::json& j, const std::string& key) {
    const auto& v = j.at(key);
    if (v.is_number()) return Complex(v.get<double>(), 0.0);
    return parseComplex(v.get<std::string>());
}

double massField(const nlohmann::json& j) {
    return j.contains("mass") ? j.at("mass").get<double>() : 1.0;
}

}  // namespace

MeasureModel measureFromJson(const nlohmann::json& j) {
    const std::string family = j.at("family").get<std::string>();
    if (family == "lebesgue") return MeasureModel::lebesgue();
    if (family == "geronimus") return MeasureModel::geronimus(complexField(j, "alpha"));
    if (family == "qhyper")
        return MeasureModel::qhyper(j.at("q").get<double>(), complexField(j, "b"));
    if (family == "hyper" || family == "hyperjacobi")
        return MeasureModel::hyperJacobi(complexField(j, "b"));
    if (family == "explicit-alpha") {
        std::vector<Complex> alphas;
        for (const auto& item : j.at("alphas")) {
            if (item.is_number()) alphas.emplace_back(item.get<double>(), 0.0);
            else alphas.push_back(parseComplex(item.get<std::string>()));
        }
        return MeasureModel::explicitAlpha(std::move(alphas), massField(j));
    }
    if (family == "explicit-cg") {
        std::vector<double> c = j.at("c").get<std::vector<double>>();
        std::vector<double> g = j.at("g").get<std::vector<double>>();
        return MeasureModel::explicitCG(std::move(c), std::move(g), massField(j));
    }
    throw std::invalid_argument("unknown family '" + family + "'");
}

MeasureModel measureFromDescriptor(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("bad family descriptor: ") + e.what());
    }
    return measureFromJson(j);
}

nlohmann::json measureToJson(const MeasureModel& m) {
    nlohmann::json j;
    j["family"] = m.name();
    switch (m.family()) {
        case Family::Lebesgue: break;
        case Family::Geronimus: j["alpha"] = formatComplex(m.alphaParam()); break;
        case Family::QHyper:
            j["q"] = m.qParam();
            j["b"] = formatComplex(m.bParam());
            break;
        case Family::HyperJacobi: j["b"] = formatComplex(m.bParam()); break;
        case Family::ExplicitAlpha: {
            nlohmann::json arr = nlohmann::json::array();
            for (const auto& a : m.alphaList()) arr.push_back(formatComplex(a));
            j["alphas"] = std::move(arr);
            j["mass"] = m.totalMass();
            break;
        }
        case Family::ExplicitCG:
            j["c"] = m.cList();
            j["g"] = m.gList();
            j["mass"] = m.totalMass();
            break;
    }
    return j;
}

}  // namespace opuckit
