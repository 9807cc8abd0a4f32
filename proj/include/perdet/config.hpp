#pragma once

#include "perdet/connection.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace perdet {

// Minimal TOML subset: comments, [table], [[array-of-tables]], key = value
// with strings, integers, floats, booleans and (nested) arrays. Enough for
// the check-config schema; parse errors carry line numbers.
struct TomlValue {
    using Array = std::vector<TomlValue>;
    using Table = std::map<std::string, TomlValue>;
    std::variant<std::string, long long, double, bool, Array, Table> v;

    bool is_table() const { return std::holds_alternative<Table>(v); }
    bool is_array() const { return std::holds_alternative<Array>(v); }
    const Table& table() const { return std::get<Table>(v); }
    const Array& array() const { return std::get<Array>(v); }
    double number() const;
    long long integer() const;
    const std::string& str() const { return std::get<std::string>(v); }
    bool boolean() const { return std::get<bool>(v); }
};

TomlValue parse_toml(const std::string& text);

enum class CheckKind {
    periods,
    monodromy,
    gamma,
    symbol,
    reciprocity,
    chow,
    jacobi,
    fermat_count,
};

std::string to_string(CheckKind k);
std::optional<CheckKind> check_kind_from_string(const std::string& s);

struct CheckConfig {
    CheckKind kind = CheckKind::periods;
    std::string id;
    // connection data (periods / monodromy / symbol kinds)
    size_t rank = 1;
    std::vector<Rational> points;
    std::vector<QMatrix> residues;
    // path options
    std::optional<Complex> base_point;
    double disc_scale = 1.0;
    // tolerances and suite sizes
    double tol = 1e-8;
    long count = 100;
    uint64_t seed = 42;
    // field parameters
    long p = 0;
    int e = 1;
    long m = 0;
    long q = 0;
    // sub-mode within a kind (e.g. jacobi: "lemma55" | "moduli" | "value";
    // chow: "exactness" | "canonical"; gamma: "dpartial" | "gauss-mult";
    // periods: "theorem-t" | "heuristic" | "invariance")
    std::string mode;
    // divisor for chow checks / B-support terms for jacobi value checks
    std::vector<Rational> divisor_points;
    bool divisor_infinity = true;
    std::vector<std::pair<Rational, long>> bsupport;

    LogConnection connection() const;
    TomlValue to_toml() const;
    static CheckConfig from_toml(const TomlValue& t);
    std::string serialize() const;  // TOML text
};

struct RunOptions {
    std::optional<double> tol_override;
    std::optional<uint64_t> seed_override;
    unsigned jobs = 0;  // 0 = hardware
};

std::vector<CheckConfig> load_config_file(const std::string& path, std::string* error);
std::vector<CheckConfig> parse_config_text(const std::string& text);

}  // namespace perdet
