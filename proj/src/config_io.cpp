#include "sendov/config_io.hpp"

#include <fstream>

#include <nlohmann/json.hpp>

namespace sendov::io {

using nlohmann::json;

namespace {

const json& require(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw ValidationError(std::string("missing required field \"") + key + "\"");
    }
    return *it;
}

long long as_int(const json& v, const char* what) {
    if (!v.is_number_integer()) {
        throw ValidationError(std::string(what) + " must be an integer");
    }
    return v.get<long long>();
}

double as_num(const json& v, const char* what) {
    if (!v.is_number()) {
        throw ValidationError(std::string(what) + " must be a number");
    }
    return v.get<double>();
}

RemainderRule parse_rule(const json& j) {
    if (!j.is_object()) {
        throw ValidationError("\"s\" must be an object with a \"kind\"");
    }
    const std::string kind = require(j, "kind").get<std::string>();
    if (kind == "const") {
        return RemainderRule::constant(as_int(require(j, "c"), "\"c\""));
    }
    if (kind == "mod") {
        return RemainderRule::cycle(as_int(require(j, "c"), "\"c\""),
                                    as_int(require(j, "d"), "\"d\""));
    }
    if (kind == "log") {
        return RemainderRule::log_rule(as_num(require(j, "c"), "\"c\""));
    }
    if (kind == "table") {
        const json& entries = require(j, "entries");
        if (!entries.is_array()) {
            throw ValidationError("table rule \"entries\" must be an array of [n, value] pairs");
        }
        std::vector<std::pair<long long, long long>> table;
        for (const auto& e : entries) {
            if (!e.is_array() || e.size() != 2) {
                throw ValidationError("table rule entries must be [n, value] pairs");
            }
            table.emplace_back(as_int(e[0], "table n"), as_int(e[1], "table value"));
        }
        return RemainderRule::table_rule(std::move(table));
    }
    throw ValidationError("unknown remainder rule kind \"" + kind + "\"");
}

report::Value rule_value(const RemainderRule& rule) {
    report::Value v = report::Value::object();
    switch (rule.kind) {
        case RemainderRule::Kind::Const:
            v.set("kind", report::Value::str("const"));
            v.set("c", report::Value::integer(rule.c));
            break;
        case RemainderRule::Kind::Mod:
            v.set("kind", report::Value::str("mod"));
            v.set("c", report::Value::integer(rule.c));
            v.set("d", report::Value::integer(rule.d));
            break;
        case RemainderRule::Kind::Log:
            v.set("kind", report::Value::str("log"));
            v.set("c", report::Value::number(rule.coef));
            break;
        case RemainderRule::Kind::Table: {
            v.set("kind", report::Value::str("table"));
            report::Value entries = report::Value::array();
            for (const auto& [n, value] : rule.table) {
                report::Value pair = report::Value::array();
                pair.push(report::Value::integer(n));
                pair.push(report::Value::integer(value));
                entries.push(std::move(pair));
            }
            v.set("entries", std::move(entries));
            break;
        }
    }
    return v;
}

}  // namespace

Complex parse_complex(const json& v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number()) {
        throw ValidationError("complex values must be [re, im] pairs");
    }
    return Complex(v[0].get<double>(), v[1].get<double>());
}

FactoredPolynomial parse_factored(const json& j) {
    if (!j.is_object()) {
        throw ValidationError("configuration must be a JSON object");
    }
    const Complex a = parse_complex(require(j, "a"));
    const long long n = as_int(require(j, "n"), "\"n\"");
    const json& zeros = require(j, "zeros");
    if (!zeros.is_array() || zeros.empty()) {
        throw ValidationError("\"zeros\" must be a nonempty array");
    }
    std::vector<PrescribedRoot> roots;
    roots.reserve(zeros.size());
    for (const auto& e : zeros) {
        const Complex z = parse_complex(require(e, "z"));
        const long long mult = as_int(require(e, "mult"), "\"mult\"");
        if (mult < 1 || mult > kDegreeCap) {
            throw ValidationError("\"mult\" must be in [1, " + std::to_string(kDegreeCap) + "]");
        }
        roots.push_back({z, static_cast<int>(mult)});
    }
    if (n < 1 || n > kDegreeCap) {
        throw ValidationError("\"n\" must be in [1, " + std::to_string(kDegreeCap) + "]");
    }
    const bool unit = j.value("unit_disk", true);
    return FactoredPolynomial(a, static_cast<int>(n), std::move(roots), unit);
}

AsymptoticConfig parse_asymptotic(const json& j) {
    if (!j.is_object()) {
        throw ValidationError("configuration must be a JSON object");
    }
    const Complex a = parse_complex(require(j, "a"));
    const json& zeros = require(j, "zeros");
    if (!zeros.is_array() || zeros.empty()) {
        throw ValidationError("\"zeros\" must be a nonempty array");
    }
    std::vector<AsymptoticEntry> entries;
    entries.reserve(zeros.size());
    for (const auto& e : zeros) {
        AsymptoticEntry entry;
        entry.z = parse_complex(require(e, "z"));
        const long long r = as_int(require(e, "r"), "\"r\"");
        if (r < 0 || r > kDegreeCap) {
            throw ValidationError("\"r\" must be in [0, " + std::to_string(kDegreeCap) + "]");
        }
        entry.r = static_cast<int>(r);
        entry.s = parse_rule(require(e, "s"));
        entries.push_back(std::move(entry));
    }
    return AsymptoticConfig(a, std::move(entries));
}

SearchSpace parse_space(const json& j) {
    if (!j.is_object()) {
        throw ValidationError("search space must be a JSON object");
    }
    SearchSpace space;
    space.k = static_cast<int>(as_int(require(j, "k"), "\"k\""));
    space.n = static_cast<int>(as_int(require(j, "n"), "\"n\""));
    const json& mults = require(j, "multiplicities");
    if (!mults.is_array()) {
        throw ValidationError("\"multiplicities\" must be an array");
    }
    for (const auto& v : mults) {
        space.multiplicities.push_back(static_cast<int>(as_int(v, "multiplicity")));
    }
    const std::string mode = require(j, "a_mode").get<std::string>();
    if (mode == "free") {
        space.a_free = true;
    } else if (mode == "fixed") {
        space.a_free = false;
        space.a_fixed = as_num(require(j, "a"), "\"a\"");
    } else {
        throw ValidationError("\"a_mode\" must be \"fixed\" or \"free\"");
    }
    if (j.contains("seed")) {
        space.seed = static_cast<std::uint64_t>(as_int(j["seed"], "\"seed\""));
    }
    return space;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ValidationError("cannot open input file: " + path);
    }
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("JSON parse error: ") + e.what());
    }
}

report::Value factored_value(const FactoredPolynomial& fp) {
    report::Value v = report::Value::object();
    v.set("a", report::Value::complex_pair(fp.a()));
    v.set("n", report::Value::integer(fp.n()));
    report::Value zeros = report::Value::array();
    for (const auto& pr : fp.others()) {
        report::Value e = report::Value::object();
        e.set("z", report::Value::complex_pair(pr.z));
        e.set("mult", report::Value::integer(pr.mult));
        zeros.push(std::move(e));
    }
    v.set("zeros", std::move(zeros));
    v.set("unit_disk", report::Value::boolean(fp.unit_disk()));
    v.set("m", report::Value::integer(fp.m()));
    v.set("k", report::Value::integer(fp.k()));
    return v;
}

report::Value asymptotic_value(const AsymptoticConfig& cfg) {
    report::Value v = report::Value::object();
    v.set("a", report::Value::complex_pair(cfg.a()));
    report::Value zeros = report::Value::array();
    for (const auto& e : cfg.entries()) {
        report::Value entry = report::Value::object();
        entry.set("z", report::Value::complex_pair(e.z));
        entry.set("r", report::Value::integer(e.r));
        entry.set("s", rule_value(e.s));
        zeros.push(std::move(entry));
    }
    v.set("zeros", std::move(zeros));
    return v;
}

report::Value space_value(const SearchSpace& space) {
    report::Value v = report::Value::object();
    v.set("k", report::Value::integer(space.k));
    v.set("n", report::Value::integer(space.n));
    report::Value mults = report::Value::array();
    for (int nj : space.multiplicities) mults.push(report::Value::integer(nj));
    v.set("multiplicities", std::move(mults));
    v.set("a_mode", report::Value::str(space.a_free ? "free" : "fixed"));
    if (!space.a_free) v.set("a", report::Value::number(space.a_fixed));
    v.set("seed", report::Value::integer(static_cast<long long>(space.seed)));
    return v;
}

}  // namespace sendov::io
