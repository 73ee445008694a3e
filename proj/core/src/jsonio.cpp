#include "oscsym/jsonio.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

namespace oscsym {

using nlohmann::json;

json matrix_to_json(const ExactMatrix& m) {
    json rows = json::array();
    for (int r = 0; r < m.n(); r++) {
        json row = json::array();
        for (int c = 0; c < m.n(); c++) {
            const GaussRational& v = m.at(r, c);
            row.push_back({{"re", v.re.str()}, {"im", v.im.str()}});
        }
        rows.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"entries", std::move(rows)}};
}

ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix JSON: expected object with 'n' and 'entries'");
    int n = 0;
    try {
        n = j.at("n").get<int>();
    } catch (const json::exception&) {
        throw ParseError("matrix JSON: 'n' is not an integer");
    }
    if (n <= 0) throw ParseError("matrix JSON: nonpositive dimension");
    const json& rows = j.at("entries");
    if (!rows.is_array() || static_cast<int>(rows.size()) != n)
        throw ParseError("matrix JSON: 'entries' must hold n rows");
    ExactMatrix m(n);
    for (int r = 0; r < n; r++) {
        const json& row = rows.at(r);
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("matrix JSON: row " + std::to_string(r) + " must hold n cells");
        for (int c = 0; c < n; c++) {
            const json& cell = row.at(c);
            const std::string where =
                "(" + std::to_string(r) + "," + std::to_string(c) + ")";
            if (!cell.is_object() || !cell.contains("re") || !cell.contains("im"))
                throw ParseError("matrix JSON: cell " + where + " must be {re, im}");
            try {
                m.set(r, c, GaussRational(Rational::parse(cell.at("re").get<std::string>()),
                                          Rational::parse(cell.at("im").get<std::string>())));
            } catch (const json::exception&) {
                throw ParseError("matrix JSON: cell " + where + " fields must be strings");
            } catch (const ParseError& e) {
                throw ParseError("matrix JSON: cell " + where + ": " + e.what());
            }
        }
    }
    return m;
}

ExactMatrix matrix_from_json_text(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("matrix JSON: parse failure");
    return matrix_from_json(j);
}

namespace {

void escape_string(const std::string& s, std::string& out) {
    out += '"';
    for (char ch : s) {
        switch (ch) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(ch) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof buf, "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

void emit(const json& j, int sig, std::string& out) {
    switch (j.type()) {
        case json::value_t::null: out += "null"; break;
        case json::value_t::boolean: out += j.get<bool>() ? "true" : "false"; break;
        case json::value_t::number_integer:
        case json::value_t::number_unsigned: out += j.dump(); break;
        case json::value_t::number_float: {
            double v = j.get<double>();
            if (std::isnan(v) || std::isinf(v)) {
                out += "null";  // JSON has no non-finite literals
                break;
            }
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.*g", sig, v);
            out += buf;
            break;
        }
        case json::value_t::string: escape_string(j.get_ref<const std::string&>(), out); break;
        case json::value_t::array: {
            out += '[';
            bool first = true;
            for (const auto& el : j) {
                if (!first) out += ',';
                first = false;
                emit(el, sig, out);
            }
            out += ']';
            break;
        }
        case json::value_t::object: {
            // nlohmann's object_t is std::map, so iteration is key-sorted.
            out += '{';
            bool first = true;
            for (auto it = j.begin(); it != j.end(); ++it) {
                if (!first) out += ',';
                first = false;
                escape_string(it.key(), out);
                out += ':';
                emit(it.value(), sig, out);
            }
            out += '}';
            break;
        }
        default: out += "null"; break;
    }
}

}  // namespace

std::string dump_deterministic(const json& j, int sig_digits) {
    if (sig_digits < 1) sig_digits = 1;
    if (sig_digits > 17) sig_digits = 17;
    std::string out;
    emit(j, sig_digits, out);
    return out;
}

}  // namespace oscsym
