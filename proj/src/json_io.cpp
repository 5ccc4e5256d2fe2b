#include "dlcoh/json_io.hpp"

#include "dlcoh/errors.hpp"

namespace dlcoh {

std::string to_string(Normalization n) { return n == Normalization::X ? "X" : "C"; }

Normalization normalization_from_string(const std::string& s) {
    if (s == "X") return Normalization::X;
    if (s == "C") return Normalization::C;
    throw InvalidArgument("normalization must be X or C, got '" + s + "'");
}

RingTag ring_tag_from_string(const std::string& s) {
    RingTag t;
    if (s == "char-zero") return t;
    if (s == "integral") {
        t.kind = RingTag::Kind::Integral;
        return t;
    }
    const std::string pre = "modular(";
    if (s.rfind(pre, 0) == 0 && s.size() > pre.size() + 1 && s.back() == ')') {
        t.kind = RingTag::Kind::Modular;
        t.m = std::stoi(s.substr(pre.size(), s.size() - pre.size() - 1));
        return t;
    }
    throw InvalidArgument("unknown ring tag '" + s + "'");
}

Json to_json(const VirtualChar& v) {
    Json j = Json::object();
    // dominant labels first, matching the text rendering
    for (auto it = v.coeffs().rbegin(); it != v.coeffs().rend(); ++it) j[it->first.to_string()] = it->second;
    return j;
}

VirtualChar virtual_char_from_json(const Json& j, int rank) {
    if (!j.is_object()) throw InvalidArgument("labels must be an object");
    VirtualChar v(rank);
    for (const auto& [k, c] : j.items()) {
        Partition lam = Partition::parse(k);
        if (lam.size() != rank) throw InvalidArgument("label " + k + " is not a partition of " + std::to_string(rank));
        v.add(lam, c.get<long>());
    }
    return v;
}

Json to_json(const CohomologyTable& t) {
    Json j;
    j["n"] = t.n;
    j["d"] = t.d;
    j["ring_tag"] = t.ring.to_string();
    j["normalization"] = to_string(t.normalization);
    const bool modular = t.ring.kind == RingTag::Kind::Modular && t.ring.m > 0;
    Json rows = Json::array();
    for (const auto& [k, v] : t.table.entries()) {
        Json e;
        e["degree"] = k.first;
        e["eigen_exp"] = k.second;
        if (modular) e["eigen_exp_mod_m"] = ((k.second % t.ring.m) + t.ring.m) % t.ring.m;
        e["labels"] = to_json(v);
        rows.push_back(std::move(e));
    }
    j["entries"] = std::move(rows);
    return j;
}

CohomologyTable table_from_json(const Json& j) {
    try {
        CohomologyTable t;
        t.n = j.at("n").get<int>();
        t.d = j.at("d").get<int>();
        t.ring = ring_tag_from_string(j.at("ring_tag").get<std::string>());
        t.normalization = normalization_from_string(j.at("normalization").get<std::string>());
        t.table = GradedChar(t.n);
        for (const auto& e : j.at("entries")) {
            const int deg = e.at("degree").get<int>();
            const int ex = e.at("eigen_exp").get<int>();
            if (e.contains("eigen_exp_mod_m") && t.ring.m > 0 &&
                e["eigen_exp_mod_m"].get<int>() != ((ex % t.ring.m) + t.ring.m) % t.ring.m)
                throw InvalidArgument("eigen_exp_mod_m disagrees with eigen_exp");
            t.table.add(deg, ex, virtual_char_from_json(e.at("labels"), t.n));
        }
        return t;
    } catch (const nlohmann::json::exception& ex) {
        throw InvalidArgument(std::string("malformed table JSON: ") + ex.what());
    }
}

Json to_json(const Report& r) {
    Json j;
    j["title"] = r.title;
    j["ok"] = r.ok();
    Json checks = Json::array();
    for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
    j["checks"] = std::move(checks);
    j["notes"] = r.notes;
    return j;
}

Json to_json(const HomDimTable& t) {
    Json j = Json::array();
    for (const auto& [a, h] : t.dims) j.push_back({{"shift", a}, {"dim", h}});
    return j;
}

}  // namespace dlcoh
