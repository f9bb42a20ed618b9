#include "cogsec/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace cogsec {
namespace io {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

[[noreturn]] void fail(const std::string& source, int line, const std::string& msg) {
    throw ConfigError(source + ":" + std::to_string(line) + ": " + msg);
}

double parse_number(const std::string& token, const std::string& source, int line) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(token, &pos);
        if (pos != token.size()) throw std::invalid_argument(token);
        return v;
    } catch (const std::exception&) {
        fail(source, line, "not a number: '" + token + "'");
    }
}

std::vector<double> parse_vector(const std::string& value, const std::string& source,
                                 int line) {
    std::vector<double> out;
    std::stringstream ss(value);
    std::string token;
    while (std::getline(ss, token, ',')) {
        token = trim(token);
        if (token.empty()) fail(source, line, "empty vector element");
        out.push_back(parse_number(token, source, line));
    }
    if (out.empty()) fail(source, line, "empty value");
    return out;
}

// Scalar broadcast, full vector, or matrix with ';'-separated rows.
std::vector<std::vector<double>> parse_matrix(const std::string& value,
                                              const std::string& source, int line) {
    std::vector<std::vector<double>> rows;
    std::stringstream ss(value);
    std::string row;
    while (std::getline(ss, row, ';')) {
        row = trim(row);
        if (row.empty()) fail(source, line, "empty matrix row");
        rows.push_back(parse_vector(row, source, line));
    }
    if (rows.empty()) fail(source, line, "empty value");
    return rows;
}

std::vector<double> broadcast(std::vector<double> v, int n, const std::string& key,
                              const std::string& source, int line) {
    if (static_cast<int>(v.size()) == 1 && n > 1) {
        v.assign(static_cast<std::size_t>(n), v[0]);
    }
    if (static_cast<int>(v.size()) != n) {
        fail(source, line, key + " must be a scalar or a vector of length " +
                               std::to_string(n));
    }
    return v;
}

double dbm_to_linear(double dbm) { return std::pow(10.0, dbm / 10.0); }

struct RawEntry {
    std::string value;
    int line;
};

}  // namespace

SystemConfig parse_config(std::istream& in, const std::string& source_name) {
    std::map<std::string, RawEntry> entries;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos) fail(source_name, lineno, "expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty()) fail(source_name, lineno, "empty key");
        if (value.empty()) fail(source_name, lineno, "empty value for " + key);
        if (entries.count(key)) fail(source_name, lineno, "duplicate key " + key);
        entries[key] = {value, lineno};
    }

    static const char* const known[] = {
        "m_users",    "n_eves",     "interference_dbm", "noise_cbs_dbm",
        "noise_eve_dbm", "sigma_m_sq", "lambda_me_db",  "theta_main",
        "theta_eve",  "sigma_ip_sq"};
    for (const auto& [key, entry] : entries) {
        bool ok = false;
        for (const char* k : known) ok = ok || key == k;
        if (!ok) fail(source_name, entry.line, "unknown key " + key);
    }
    auto get = [&](const std::string& key) -> const RawEntry& {
        auto it = entries.find(key);
        if (it == entries.end()) {
            throw ConfigError(source_name + ": missing required key " + key);
        }
        return it->second;
    };
    auto scalar = [&](const std::string& key) {
        const RawEntry& e = get(key);
        return parse_number(e.value, source_name, e.line);
    };

    SystemConfig cfg;
    {
        const RawEntry& e = get("m_users");
        const double m = parse_number(e.value, source_name, e.line);
        if (m != std::floor(m) || m < 1) {
            fail(source_name, e.line, "m_users must be >= 1");
        }
        cfg.m_users = static_cast<int>(m);
    }
    {
        const RawEntry& e = get("n_eves");
        const double n = parse_number(e.value, source_name, e.line);
        if (n != std::floor(n) || n < 1) fail(source_name, e.line, "n_eves must be >= 1");
        cfg.n_eves = static_cast<int>(n);
    }

    cfg.interference_cap = dbm_to_linear(scalar("interference_dbm"));
    cfg.noise_cbs = dbm_to_linear(scalar("noise_cbs_dbm"));
    {
        const RawEntry& e = get("noise_eve_dbm");
        auto v = broadcast(parse_vector(e.value, source_name, e.line), cfg.n_eves,
                           "noise_eve_dbm", source_name, e.line);
        for (double& x : v) x = dbm_to_linear(x);
        cfg.noise_eve = std::move(v);
    }
    cfg.sigma_m_sq = scalar("sigma_m_sq");
    cfg.lambda_me = std::pow(10.0, scalar("lambda_me_db") / 10.0);
    {
        const RawEntry& e = get("theta_main");
        cfg.theta_main = broadcast(parse_vector(e.value, source_name, e.line),
                                   cfg.m_users, "theta_main", source_name, e.line);
    }
    {
        const RawEntry& e = get("sigma_ip_sq");
        cfg.sigma_ip_sq = broadcast(parse_vector(e.value, source_name, e.line),
                                    cfg.m_users, "sigma_ip_sq", source_name, e.line);
    }
    {
        const RawEntry& e = get("theta_eve");
        auto rows = parse_matrix(e.value, source_name, e.line);
        if (rows.size() == 1) {
            // Broadcast one row (or one scalar) to all users.
            rows[0] = broadcast(std::move(rows[0]), cfg.n_eves, "theta_eve",
                                source_name, e.line);
            rows.assign(static_cast<std::size_t>(cfg.m_users), rows[0]);
        }
        if (static_cast<int>(rows.size()) != cfg.m_users) {
            fail(source_name, e.line,
                 "theta_eve must have 1 or m_users rows of n_eves values");
        }
        for (auto& row : rows) {
            row = broadcast(std::move(row), cfg.n_eves, "theta_eve", source_name,
                            e.line);
        }
        cfg.theta_eve = std::move(rows);
    }

    cfg.validate();
    return cfg;
}

SystemConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file: " + path);
    return parse_config(in, path);
}

namespace {

struct PresetSpec {
    const char* name;
    int m_users;
    int n_eves;
    double sigma_m_sq;
    double sigma_ip_sq;
    double theta_eve;
};

// Reference scenarios; all use I = N_b = N_e = 0 dBm and theta_main = 1,
// with a default MER of 10 dB (sweeps override lambda_me).
constexpr PresetSpec kPresets[] = {
    {"fig2", 4, 2, 0.8, 0.5, 0.6},
    {"fig3", 4, 8, 0.8, 0.5, 0.6},
    {"fig4", 8, 2, 0.8, 0.5, 0.6},
    {"fig5", 4, 4, 1.0, 1.0, 1.0},
    {"fig6", 8, 4, 1.0, 1.0, 1.0},
};

}  // namespace

std::optional<SystemConfig> preset_config(const std::string& name) {
    for (const PresetSpec& p : kPresets) {
        if (name == p.name) {
            SystemConfig cfg = SystemConfig::symmetric(
                p.m_users, p.n_eves, 1.0, 1.0, 1.0, p.sigma_m_sq, 10.0, p.sigma_ip_sq);
            for (auto& row : cfg.theta_eve) {
                for (double& v : row) v = p.theta_eve;
            }
            cfg.validate();
            return cfg;
        }
    }
    return std::nullopt;
}

std::vector<std::string> preset_names() {
    std::vector<std::string> names;
    for (const PresetSpec& p : kPresets) names.emplace_back(p.name);
    return names;
}

std::string preset_file_text(const std::string& name) {
    for (const PresetSpec& p : kPresets) {
        if (name != p.name) continue;
        std::ostringstream out;
        out << "# scenario preset: " << p.name << "\n"
            << "m_users          = " << p.m_users << "\n"
            << "n_eves           = " << p.n_eves << "\n"
            << "interference_dbm = 0\n"
            << "noise_cbs_dbm    = 0\n"
            << "noise_eve_dbm    = 0\n"
            << "sigma_m_sq       = " << format_double(p.sigma_m_sq) << "\n"
            << "lambda_me_db     = 10\n"
            << "theta_main       = 1\n"
            << "theta_eve        = " << format_double(p.theta_eve) << "\n"
            << "sigma_ip_sq      = " << format_double(p.sigma_ip_sq) << "\n";
        return out.str();
    }
    throw ConfigError("unknown preset: " + name);
}

std::string format_double(double value) {
    char buf[40];
    // Shortest representation that round-trips.
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), value);
    return std::string(buf, end);
}

namespace {

std::string status_of(const mc::SweepRow& row) {
    return row.unresolved ? "unresolved" : "ok";
}

}  // namespace

void write_rows_csv(std::ostream& out, const std::vector<mc::SweepRow>& rows) {
    out << "scheme,m_users,n_eves,lambda_me_db,metric,value,std_error,trials,"
           "master_seed,status\n";
    for (const auto& row : rows) {
        out << scheme_name(row.scheme) << ',' << row.m_users << ',' << row.n_eves
            << ',' << format_double(row.lambda_me_db) << ','
            << mc::metric_name(row.metric) << ','
            << (row.unresolved ? std::string() : format_double(row.value)) << ','
            << format_double(row.std_error) << ',' << row.trials << ','
            << row.master_seed << ',' << status_of(row) << '\n';
    }
}

void write_rows_json(std::ostream& out, const std::vector<mc::SweepRow>& rows) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& row : rows) {
        nlohmann::json obj;
        obj["scheme"] = scheme_name(row.scheme);
        obj["m_users"] = row.m_users;
        obj["n_eves"] = row.n_eves;
        obj["lambda_me_db"] = row.lambda_me_db;
        obj["metric"] = mc::metric_name(row.metric);
        if (row.unresolved) {
            obj["value"] = nullptr;
        } else {
            obj["value"] = row.value;
        }
        obj["std_error"] = row.std_error;
        obj["trials"] = row.trials;
        obj["master_seed"] = row.master_seed;
        obj["status"] = status_of(row);
        arr.push_back(std::move(obj));
    }
    out << arr.dump(2) << '\n';
}

void write_rows(const std::string& path, OutputFormat format,
                const std::vector<mc::SweepRow>& rows) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ConfigError("cannot open output file: " + path);
    if (format == OutputFormat::Csv) {
        write_rows_csv(out, rows);
    } else {
        write_rows_json(out, rows);
    }
}

}  // namespace io
}  // namespace cogsec
