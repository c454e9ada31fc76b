#include "mubkit/serialize.hpp"

#include <json.hpp>

namespace mubkit {

namespace {

using nlohmann::json;

const char* kind_name(BasisKind k) {
    switch (k) {
        case BasisKind::B0a: return "b0a";
        case BasisKind::Computational: return "computational";
        case BasisKind::Tensor: return "tensor";
        case BasisKind::W: return "w";
    }
    return "unknown";
}

BasisKind kind_from_name(const std::string& s) {
    if (s == "b0a") return BasisKind::B0a;
    if (s == "computational") return BasisKind::Computational;
    if (s == "tensor") return BasisKind::Tensor;
    if (s == "w") return BasisKind::W;
    throw std::invalid_argument("unknown basis kind: " + s);
}

json amplitude_to_json(const ExactAmplitude& a) {
    json exps = json::object();
    for (int k = 0; k < a.elem().order(); ++k)
        if (a.elem().coeff(k) != 0) exps[std::to_string(k)] = a.elem().coeff(k);
    return json{{"omega_exponents", std::move(exps)}, {"scale_s", a.rootd_scale()}};
}

ExactAmplitude amplitude_from_json(int d, const json& j) {
    GroupRingElement e(d);
    for (const auto& [key, value] : j.at("omega_exponents").items())
        e.add_term(std::stoll(key), value.get<Coeff>());
    return ExactAmplitude(std::move(e), j.at("scale_s").get<int>());
}

json vector_to_json(const StateVector& v) {
    json entries = json::array();
    if (v.has_exact()) {
        for (const auto& a : v.exact()) entries.push_back(amplitude_to_json(a));
    } else {
        for (const auto& z : v.floats())
            entries.push_back(json{{"re", z.real()}, {"im", z.imag()}});
    }
    return json{{"label", v.label()}, {"entries", std::move(entries)}};
}

StateVector vector_from_json(int d, bool exact, const json& j) {
    const std::string label = j.at("label").get<std::string>();
    if (exact) {
        std::vector<ExactAmplitude> amps;
        for (const auto& entry : j.at("entries")) amps.push_back(amplitude_from_json(d, entry));
        return StateVector::from_exact(std::move(amps), label);
    }
    std::vector<Complex> amps;
    for (const auto& entry : j.at("entries"))
        amps.emplace_back(entry.at("re").get<double>(), entry.at("im").get<double>());
    return StateVector::from_floats(std::move(amps), label);
}

json basis_to_json(const Basis& b) {
    json vectors = json::array();
    for (const auto& v : b.vectors()) vectors.push_back(vector_to_json(v));
    json labels = json::object();
    if (b.label_a() >= 0) labels["a"] = b.label_a();
    if (b.label_b() >= 0) labels["b"] = b.label_b();
    return json{{"name", b.name()},
                {"kind", kind_name(b.kind())},
                {"d", b.d()},
                {"labels", std::move(labels)},
                {"vectors", std::move(vectors)}};
}

Basis basis_from_json(const json& j) {
    const int d = j.at("d").get<int>();
    const BasisKind kind = kind_from_name(j.at("kind").get<std::string>());
    const json& labels = j.at("labels");
    const int a = labels.contains("a") ? labels.at("a").get<int>() : -1;
    const int b = labels.contains("b") ? labels.at("b").get<int>() : -1;
    const json& vecs = j.at("vectors");
    const bool exact =
        !vecs.empty() && !vecs.front().at("entries").empty() &&
        vecs.front().at("entries").front().contains("omega_exponents");
    std::vector<StateVector> vectors;
    for (const auto& v : vecs) vectors.push_back(vector_from_json(d, exact, v));
    return Basis(d, kind, j.at("name").get<std::string>(), std::move(vectors), a, b);
}

}  // namespace

std::string bases_to_json_text(const std::vector<Basis>& bases) {
    json out;
    out["schema"] = 1;
    out["d"] = bases.empty() ? 0 : bases.front().d();
    bool exact = !bases.empty();
    for (const auto& b : bases) exact = exact && b.exact();
    out["mode"] = exact ? "exact" : "float";
    json arr = json::array();
    for (const auto& b : bases) arr.push_back(basis_to_json(b));
    out["bases"] = std::move(arr);
    return out.dump(2) + "\n";
}

std::vector<Basis> bases_from_json_text(const std::string& text) {
    const json j = json::parse(text);
    if (j.at("schema").get<int>() != 1)
        throw std::invalid_argument("unsupported schema version");
    std::vector<Basis> bases;
    for (const auto& b : j.at("bases")) bases.push_back(basis_from_json(b));
    return bases;
}

}  // namespace mubkit
