#include "perdet/config.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace perdet {

double TomlValue::number() const {
    if (std::holds_alternative<double>(v)) return std::get<double>(v);
    if (std::holds_alternative<long long>(v)) return static_cast<double>(std::get<long long>(v));
    throw std::runtime_error("toml: expected a number");
}

long long TomlValue::integer() const {
    if (std::holds_alternative<long long>(v)) return std::get<long long>(v);
    throw std::runtime_error("toml: expected an integer");
}

namespace {

struct Cursor {
    const std::string& s;
    size_t i = 0;
    int line = 1;
    bool eof() const { return i >= s.size(); }
    char peek() const { return s[i]; }
    char get() {
        char c = s[i++];
        if (c == '\n') ++line;
        return c;
    }
    void skip_ws_inline() {
        while (!eof() && (peek() == ' ' || peek() == '\t')) ++i;
    }
    void skip_ws_and_comments() {
        while (!eof()) {
            char c = peek();
            if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
                get();
            } else if (c == '#') {
                while (!eof() && peek() != '\n') ++i;
            } else {
                break;
            }
        }
    }
    [[noreturn]] void fail(const std::string& msg) const {
        throw std::runtime_error("toml parse error at line " + std::to_string(line) + ": " + msg);
    }
};

std::string parse_key(Cursor& c) {
    c.skip_ws_inline();
    std::string k;
    while (!c.eof() && (std::isalnum(static_cast<unsigned char>(c.peek())) || c.peek() == '_' ||
                        c.peek() == '-')) {
        k += c.get();
    }
    if (k.empty()) c.fail("expected a key");
    return k;
}

TomlValue parse_value(Cursor& c);

TomlValue parse_array(Cursor& c) {
    TomlValue::Array arr;
    c.get();  // '['
    while (true) {
        c.skip_ws_and_comments();
        if (c.eof()) c.fail("unterminated array");
        if (c.peek() == ']') {
            c.get();
            break;
        }
        arr.push_back(parse_value(c));
        c.skip_ws_and_comments();
        if (!c.eof() && c.peek() == ',') c.get();
    }
    TomlValue v;
    v.v = std::move(arr);
    return v;
}

TomlValue parse_value(Cursor& c) {
    c.skip_ws_inline();
    if (c.eof()) c.fail("expected a value");
    char ch = c.peek();
    TomlValue v;
    if (ch == '"') {
        c.get();
        std::string s;
        while (!c.eof() && c.peek() != '"') {
            char x = c.get();
            if (x == '\\' && !c.eof()) {
                char esc = c.get();
                switch (esc) {
                    case 'n': s += '\n'; break;
                    case 't': s += '\t'; break;
                    case '"': s += '"'; break;
                    case '\\': s += '\\'; break;
                    default: c.fail("bad escape");
                }
            } else {
                s += x;
            }
        }
        if (c.eof()) c.fail("unterminated string");
        c.get();
        v.v = std::move(s);
        return v;
    }
    if (ch == '[') return parse_array(c);
    // bare token: number or boolean
    std::string tok;
    while (!c.eof() && c.peek() != '\n' && c.peek() != ',' && c.peek() != ']' && c.peek() != '#' &&
           c.peek() != ' ' && c.peek() != '\t' && c.peek() != '\r') {
        tok += c.get();
    }
    if (tok == "true") {
        v.v = true;
        return v;
    }
    if (tok == "false") {
        v.v = false;
        return v;
    }
    if (tok.find_first_of(".eE") != std::string::npos &&
        tok.find_first_not_of("+-0123456789.eE") == std::string::npos) {
        v.v = std::stod(tok);
        return v;
    }
    try {
        size_t pos = 0;
        long long n = std::stoll(tok, &pos);
        if (pos == tok.size()) {
            v.v = n;
            return v;
        }
    } catch (...) {
    }
    c.fail("cannot parse value '" + tok + "'");
}

}  // namespace

TomlValue parse_toml(const std::string& text) {
    Cursor c{text};
    TomlValue root;
    root.v = TomlValue::Table{};
    auto* current = &std::get<TomlValue::Table>(root.v);
    while (true) {
        c.skip_ws_and_comments();
        if (c.eof()) break;
        if (c.peek() == '[') {
            c.get();
            bool array_table = (!c.eof() && c.peek() == '[');
            if (array_table) c.get();
            std::string name = parse_key(c);
            c.skip_ws_inline();
            if (c.eof() || c.get() != ']') c.fail("expected ']'");
            if (array_table && (c.eof() || c.get() != ']')) c.fail("expected ']]'");
            auto& table = std::get<TomlValue::Table>(root.v);
            if (array_table) {
                auto it = table.find(name);
                if (it == table.end()) {
                    TomlValue arr;
                    arr.v = TomlValue::Array{};
                    it = table.emplace(name, std::move(arr)).first;
                }
                auto& arr = std::get<TomlValue::Array>(it->second.v);
                TomlValue entry;
                entry.v = TomlValue::Table{};
                arr.push_back(std::move(entry));
                current = &std::get<TomlValue::Table>(arr.back().v);
            } else {
                TomlValue tv;
                tv.v = TomlValue::Table{};
                auto [it, ok] = table.emplace(name, std::move(tv));
                (void)ok;
                current = &std::get<TomlValue::Table>(it->second.v);
            }
            continue;
        }
        std::string key = parse_key(c);
        c.skip_ws_inline();
        if (c.eof() || c.get() != '=') c.fail("expected '=' after key '" + key + "'");
        (*current)[key] = parse_value(c);
    }
    return root;
}

std::string to_string(CheckKind k) {
    switch (k) {
        case CheckKind::periods: return "periods";
        case CheckKind::monodromy: return "monodromy";
        case CheckKind::gamma: return "gamma";
        case CheckKind::symbol: return "symbol";
        case CheckKind::reciprocity: return "reciprocity";
        case CheckKind::chow: return "chow";
        case CheckKind::jacobi: return "jacobi";
        case CheckKind::fermat_count: return "fermat-count";
    }
    return "?";
}

std::optional<CheckKind> check_kind_from_string(const std::string& s) {
    for (CheckKind k : {CheckKind::periods, CheckKind::monodromy, CheckKind::gamma,
                        CheckKind::symbol, CheckKind::reciprocity, CheckKind::chow,
                        CheckKind::jacobi, CheckKind::fermat_count})
        if (to_string(k) == s) return k;
    return std::nullopt;
}

LogConnection CheckConfig::connection() const {
    LogConnection c;
    c.rank = rank;
    c.points = points;
    c.residues = residues;
    c.label = id;
    c.validate();
    return c;
}

TomlValue CheckConfig::to_toml() const {
    TomlValue::Table t;
    auto str = [](const std::string& s) {
        TomlValue v;
        v.v = s;
        return v;
    };
    auto num = [](double d) {
        TomlValue v;
        v.v = d;
        return v;
    };
    auto integer = [](long long n) {
        TomlValue v;
        v.v = n;
        return v;
    };
    t["kind"] = str(to_string(kind));
    t["id"] = str(id);
    t["rank"] = integer(static_cast<long long>(rank));
    {
        TomlValue::Array pts;
        for (const auto& p : points) pts.push_back(str(perdet::to_string(p)));
        TomlValue v;
        v.v = std::move(pts);
        t["points"] = std::move(v);
    }
    {
        TomlValue::Array all;
        for (const auto& m : residues) {
            TomlValue::Array rows;
            for (size_t i = 0; i < m.rows(); ++i) {
                TomlValue::Array row;
                for (size_t j = 0; j < m.cols(); ++j) row.push_back(str(perdet::to_string(m(i, j))));
                TomlValue rv;
                rv.v = std::move(row);
                rows.push_back(std::move(rv));
            }
            TomlValue mv;
            mv.v = std::move(rows);
            all.push_back(std::move(mv));
        }
        TomlValue v;
        v.v = std::move(all);
        t["residues"] = std::move(v);
    }
    if (base_point) {
        TomlValue::Array bp{num(base_point->real()), num(base_point->imag())};
        TomlValue v;
        v.v = std::move(bp);
        t["base_point"] = std::move(v);
    }
    t["disc_scale"] = num(disc_scale);
    t["tol"] = num(tol);
    t["count"] = integer(count);
    t["seed"] = integer(static_cast<long long>(seed));
    t["p"] = integer(p);
    t["e"] = integer(e);
    t["m"] = integer(m);
    t["q"] = integer(q);
    t["mode"] = str(mode);
    {
        TomlValue::Array pts;
        for (const auto& x : divisor_points) pts.push_back(str(perdet::to_string(x)));
        TomlValue v;
        v.v = std::move(pts);
        t["divisor_points"] = std::move(v);
        TomlValue b;
        b.v = divisor_infinity;
        t["divisor_infinity"] = std::move(b);
    }
    {
        TomlValue::Array terms;
        for (const auto& [a, n] : bsupport) {
            TomlValue::Array pair{str(perdet::to_string(a)), integer(n)};
            TomlValue v;
            v.v = std::move(pair);
            terms.push_back(std::move(v));
        }
        TomlValue v;
        v.v = std::move(terms);
        t["bsupport"] = std::move(v);
    }
    TomlValue out;
    out.v = std::move(t);
    return out;
}

CheckConfig CheckConfig::from_toml(const TomlValue& tv) {
    const auto& t = tv.table();
    CheckConfig c;
    auto get = [&](const char* k) -> const TomlValue* {
        auto it = t.find(k);
        return it == t.end() ? nullptr : &it->second;
    };
    if (auto* v = get("kind")) {
        auto k = check_kind_from_string(v->str());
        if (!k) throw std::runtime_error("unknown check kind '" + v->str() + "'");
        c.kind = *k;
    }
    if (auto* v = get("id")) c.id = v->str();
    if (auto* v = get("rank")) c.rank = static_cast<size_t>(v->integer());
    if (auto* v = get("points"))
        for (const auto& p : v->array()) c.points.push_back(parse_rational(p.str()));
    if (auto* v = get("residues")) {
        for (const auto& mat : v->array()) {
            std::vector<std::vector<Rational>> rows;
            for (const auto& row : mat.array()) {
                std::vector<Rational> r;
                for (const auto& x : row.array()) r.push_back(parse_rational(x.str()));
                rows.push_back(std::move(r));
            }
            c.residues.push_back(QMatrix::from_rows(rows));
        }
    }
    if (auto* v = get("base_point")) {
        const auto& a = v->array();
        if (a.size() != 2) throw std::runtime_error("base_point must be [re, im]");
        c.base_point = Complex(a[0].number(), a[1].number());
    }
    if (auto* v = get("disc_scale")) c.disc_scale = v->number();
    if (auto* v = get("tol")) c.tol = v->number();
    if (auto* v = get("count")) c.count = static_cast<long>(v->integer());
    if (auto* v = get("seed")) c.seed = static_cast<uint64_t>(v->integer());
    if (auto* v = get("p")) c.p = static_cast<long>(v->integer());
    if (auto* v = get("e")) c.e = static_cast<int>(v->integer());
    if (auto* v = get("m")) c.m = static_cast<long>(v->integer());
    if (auto* v = get("q")) c.q = static_cast<long>(v->integer());
    if (auto* v = get("mode")) c.mode = v->str();
    if (auto* v = get("divisor_points"))
        for (const auto& p : v->array()) c.divisor_points.push_back(parse_rational(p.str()));
    if (auto* v = get("divisor_infinity")) c.divisor_infinity = v->boolean();
    if (auto* v = get("bsupport"))
        for (const auto& pair : v->array()) {
            const auto& a = pair.array();
            c.bsupport.emplace_back(parse_rational(a[0].str()), static_cast<long>(a[1].integer()));
        }
    return c;
}

namespace {

void emit_value(std::ostream& os, const TomlValue& v) {
    if (std::holds_alternative<std::string>(v.v)) {
        os << '"' << v.str() << '"';
    } else if (std::holds_alternative<long long>(v.v)) {
        os << std::get<long long>(v.v);
    } else if (std::holds_alternative<double>(v.v)) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", std::get<double>(v.v));
        std::string s = buf;
        if (s.find_first_of(".eE") == std::string::npos) s += ".0";
        os << s;
    } else if (std::holds_alternative<bool>(v.v)) {
        os << (v.boolean() ? "true" : "false");
    } else if (v.is_array()) {
        os << '[';
        bool first = true;
        for (const auto& x : v.array()) {
            if (!first) os << ", ";
            first = false;
            emit_value(os, x);
        }
        os << ']';
    }
}

}  // namespace

std::string CheckConfig::serialize() const {
    std::ostringstream os;
    os << "[[check]]\n";
    for (const auto& [k, v] : to_toml().table()) {
        os << k << " = ";
        emit_value(os, v);
        os << "\n";
    }
    return os.str();
}

std::vector<CheckConfig> parse_config_text(const std::string& text) {
    TomlValue root = parse_toml(text);
    std::vector<CheckConfig> out;
    const auto& t = root.table();
    auto it = t.find("check");
    if (it == t.end()) return out;
    for (const auto& entry : it->second.array()) out.push_back(CheckConfig::from_toml(entry));
    return out;
}

std::vector<CheckConfig> load_config_file(const std::string& path, std::string* error) {
    std::ifstream in(path);
    if (!in) {
        if (error) *error = "cannot open config file: " + path;
        return {};
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_config_text(ss.str());
    } catch (const std::exception& e) {
        if (error) *error = e.what();
        return {};
    }
}

}  // namespace perdet
