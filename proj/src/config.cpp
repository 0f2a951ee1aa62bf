#include "mlspin/config.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

namespace mlspin {

namespace {

using nlohmann::json;

std::pair<int, int> line_col_of_byte(const std::string& text, std::size_t byte) {
    int line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

int line_of_key(const std::string& text, const std::string& key) {
    const std::string needle = "\"" + key + "\"";
    const auto pos = text.find(needle);
    if (pos == std::string::npos) return 0;
    return line_col_of_byte(text, pos).first;
}

[[noreturn]] void fail(const std::string& origin, const std::string& text,
                       const std::string& key_path, const std::string& key,
                       const std::string& message) {
    std::ostringstream os;
    os << origin;
    if (const int line = line_of_key(text, key); line > 0) os << ":" << line;
    os << ": " << key_path << ": " << message;
    throw ConfigError(os.str());
}

void check_keys(const json& obj, const std::string& path,
                const std::set<std::string>& allowed, const std::string& origin,
                const std::string& text) {
    for (const auto& [k, v] : obj.items())
        if (!allowed.count(k)) fail(origin, text, path + "." + k, k, "unknown key");
}

double get_num(const json& obj, const std::string& path, const std::string& key, double dflt,
               const std::string& origin, const std::string& text) {
    if (!obj.contains(key)) return dflt;
    if (!obj[key].is_number()) fail(origin, text, path + "." + key, key, "expected a number");
    return obj[key].get<double>();
}

Vec3 get_vec3(const json& obj, const std::string& path, const std::string& key, Vec3 dflt,
              const std::string& origin, const std::string& text) {
    if (!obj.contains(key)) return dflt;
    const json& a = obj[key];
    if (!a.is_array() || a.size() != 3 || !a[0].is_number() || !a[1].is_number() ||
        !a[2].is_number())
        fail(origin, text, path + "." + key, key, "expected an array of 3 numbers");
    return {a[0].get<double>(), a[1].get<double>(), a[2].get<double>()};
}

} // namespace

SimConfig parse_sim_config_text(const std::string& text, const std::string& origin) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_col_of_byte(text, e.byte > 0 ? e.byte - 1 : 0);
        std::ostringstream os;
        os << origin << ":" << line << ":" << col << ": " << e.what();
        throw ConfigError(os.str());
    }
    if (!root.is_object()) throw ConfigError(origin + ": top level must be a JSON object");

    SimConfig cfg;
    check_keys(root, "$", {"grid", "charge", "particle", "fields", "run", "checks"}, origin,
               text);

    if (root.contains("grid")) {
        const json& g = root["grid"];
        check_keys(g, "grid", {"L", "N"}, origin, text);
        const double L = get_num(g, "grid", "L", 16.0, origin, text);
        const double N = get_num(g, "grid", "N", 48, origin, text);
        if (N != std::floor(N) || N < 8 || int(N) % 2 != 0)
            fail(origin, text, "grid.N", "N", "must be an even integer >= 8");
        if (!(L > 0)) fail(origin, text, "grid.L", "L", "must be positive");
        cfg.grid = GridSpec(L, int(N));
    }
    if (root.contains("charge")) {
        const json& c = root["charge"];
        check_keys(c, "charge", {"R_rho", "Q"}, origin, text);
        cfg.R_rho = get_num(c, "charge", "R_rho", cfg.R_rho, origin, text);
        cfg.Q = get_num(c, "charge", "Q", cfg.Q, origin, text);
        if (!(cfg.R_rho > 0)) fail(origin, text, "charge.R_rho", "R_rho", "must be positive");
    }
    if (!(2.0 * cfg.R_rho < 0.5 * cfg.grid.L))
        throw ConfigError(origin + ": charge.R_rho: support does not fit the box "
                                   "(need 2*R_rho < L/2)");
    if (root.contains("particle")) {
        const json& p = root["particle"];
        check_keys(p, "particle", {"m", "I", "q0", "p0", "pi0"}, origin, text);
        cfg.particle.mass = get_num(p, "particle", "m", 1.0, origin, text);
        cfg.particle.inertia = get_num(p, "particle", "I", 1.0, origin, text);
        if (!(cfg.particle.mass > 0)) fail(origin, text, "particle.m", "m", "must be positive");
        if (!(cfg.particle.inertia > 0))
            fail(origin, text, "particle.I", "I", "must be positive");
        cfg.q0 = get_vec3(p, "particle", "q0", cfg.q0, origin, text);
        cfg.p0 = get_vec3(p, "particle", "p0", cfg.p0, origin, text);
        cfg.pi0 = get_vec3(p, "particle", "pi0", cfg.pi0, origin, text);
    }
    if (root.contains("fields")) {
        const json& f = root["fields"];
        check_keys(f, "fields", {"type", "seed", "envelope_radius"}, origin, text);
        if (f.contains("type")) {
            if (!f["type"].is_string())
                fail(origin, text, "fields.type", "type", "expected a string");
            try {
                cfg.fields.kind = field_kind_from_string(f["type"].get<std::string>());
            } catch (const std::invalid_argument& e) {
                fail(origin, text, "fields.type", "type", e.what());
            }
        }
        if (f.contains("seed")) {
            if (!f["seed"].is_number_unsigned() && !f["seed"].is_number_integer())
                fail(origin, text, "fields.seed", "seed", "expected an unsigned integer");
            cfg.fields.seed = f["seed"].get<std::uint64_t>();
        }
        cfg.fields.envelope_radius =
            get_num(f, "fields", "envelope_radius", cfg.fields.envelope_radius, origin, text);
        if (!(cfg.fields.envelope_radius > 0))
            fail(origin, text, "fields.envelope_radius", "envelope_radius", "must be positive");
    }
    if (cfg.fields.kind == FieldInitSpec::Kind::random_localized &&
        !(cfg.fields.envelope_radius + cfg.R_rho < 0.5 * cfg.grid.L - 2.0 * cfg.grid.h()))
        throw ConfigError(origin +
                          ": fields.envelope_radius: envelope_radius + R_rho must stay below "
                          "L/2 - 2h");
    if (root.contains("run")) {
        const json& r = root["run"];
        check_keys(r, "run", {"dt", "T", "observe_every", "reproject_gauge"}, origin, text);
        cfg.run.dt = get_num(r, "run", "dt", 0.0, origin, text);
        cfg.run.T = get_num(r, "run", "T", cfg.run.T, origin, text);
        if (r.contains("dt") && !(cfg.run.dt > 0)) fail(origin, text, "run.dt", "dt", "must be positive");
        if (!(cfg.run.T >= 0)) fail(origin, text, "run.T", "T", "must be non-negative");
        const double oe = get_num(r, "run", "observe_every", cfg.run.observe_every, origin, text);
        if (oe != std::floor(oe) || oe < 1)
            fail(origin, text, "run.observe_every", "observe_every", "must be an integer >= 1");
        cfg.run.observe_every = int(oe);
        if (r.contains("reproject_gauge")) {
            if (!r["reproject_gauge"].is_boolean())
                fail(origin, text, "run.reproject_gauge", "reproject_gauge",
                     "expected a boolean");
            cfg.run.reproject_gauge = r["reproject_gauge"].get<bool>();
        }
    }
    if (root.contains("checks")) {
        const json& ch = root["checks"];
        if (!ch.is_object())
            throw ConfigError(origin + ": checks: expected an object of name -> tolerance");
        for (const auto& [k, v] : ch.items()) {
            if (!v.is_number())
                fail(origin, text, "checks." + k, k, "tolerance must be a number");
            cfg.check_tolerances[k] = v.get<double>();
        }
    }
    return cfg;
}

SimConfig parse_sim_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path + ": cannot open config file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_sim_config_text(ss.str(), path);
}

} // namespace mlspin
