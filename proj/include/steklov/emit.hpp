// emit.hpp -- deterministic CSV / JSON record emission
// SPDX-License-Identifier: MIT
//
// Records are ordered key-value rows. All floating-point values are printed
// with std::to_chars at 17 significant digits (locale-free, '.' separator,
// round-trip exact for doubles), so identical inputs serialize to identical
// bytes. CSV fields follow RFC 4180 quoting; JSON is an array of flat
// objects; NaN and infinities become null there and "nan"/"inf" in CSV.
#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "steklov/errors.hpp"

namespace steklov {

struct Field {
    enum class Kind { Real, Integer, Text, Boolean };
    std::string key;
    Kind kind = Kind::Real;
    double real = 0.0;
    long long integer = 0;
    std::string text;
    bool boolean = false;
};

using Record = std::vector<Field>;

inline Field freal(std::string key, double v) {
    Field f;
    f.key = std::move(key);
    f.kind = Field::Kind::Real;
    f.real = v;
    return f;
}
inline Field fint(std::string key, long long v) {
    Field f;
    f.key = std::move(key);
    f.kind = Field::Kind::Integer;
    f.integer = v;
    return f;
}
inline Field ftext(std::string key, std::string v) {
    Field f;
    f.key = std::move(key);
    f.kind = Field::Kind::Text;
    f.text = std::move(v);
    return f;
}
inline Field fbool(std::string key, bool v) {
    Field f;
    f.key = std::move(key);
    f.kind = Field::Kind::Boolean;
    f.boolean = v;
    return f;
}

// 17 significant digits, general format: round-trips every double.
inline std::string format_real(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v,
                                   std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

inline std::string format_integer(long long v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

namespace detail {

inline std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline std::string csv_value(const Field& f) {
    switch (f.kind) {
        case Field::Kind::Real: return format_real(f.real);
        case Field::Kind::Integer: return format_integer(f.integer);
        case Field::Kind::Boolean: return f.boolean ? "true" : "false";
        case Field::Kind::Text: return csv_escape(f.text);
    }
    return {};
}

inline std::string json_escape(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char hex[8];
                    std::snprintf(hex, sizeof hex, "\\u%04x", c);
                    out += hex;
                } else {
                    out += c;
                }
        }
    }
    out += '"';
    return out;
}

inline std::string json_value(const Field& f) {
    switch (f.kind) {
        case Field::Kind::Real:
            if (!std::isfinite(f.real)) return "null";
            return format_real(f.real);
        case Field::Kind::Integer: return format_integer(f.integer);
        case Field::Kind::Boolean: return f.boolean ? "true" : "false";
        case Field::Kind::Text: return json_escape(f.text);
    }
    return {};
}

}  // namespace detail

inline void write_csv(std::ostream& os, const std::vector<Record>& records) {
    if (records.empty()) throw EmitError("emit: no records to write");
    const Record& head = records.front();
    for (std::size_t i = 0; i < head.size(); ++i) {
        if (i) os << ',';
        os << detail::csv_escape(head[i].key);
    }
    os << '\n';
    for (const Record& r : records) {
        if (r.size() != head.size())
            throw EmitError("emit: ragged record set (column count varies)");
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) os << ',';
            os << detail::csv_value(r[i]);
        }
        os << '\n';
    }
}

inline void write_json(std::ostream& os, const std::vector<Record>& records) {
    if (records.empty()) throw EmitError("emit: no records to write");
    os << "[\n";
    for (std::size_t k = 0; k < records.size(); ++k) {
        const Record& r = records[k];
        os << "  {";
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) os << ", ";
            os << detail::json_escape(r[i].key) << ": " << detail::json_value(r[i]);
        }
        os << (k + 1 < records.size() ? "},\n" : "}\n");
    }
    os << "]\n";
}

enum class Format { Csv, Json };

// Serializes to `path` ("-" for stdout) and returns the byte count.
inline std::size_t emit(const std::vector<Record>& records, Format format,
                        const std::string& path, std::ostream& stdout_stream) {
    std::string body;
    {
        std::ostringstream os;
        if (format == Format::Csv)
            write_csv(os, records);
        else
            write_json(os, records);
        body = os.str();
    }
    if (path == "-") {
        stdout_stream << body;
        stdout_stream.flush();
    } else {
        std::ofstream out(path, std::ios::binary);
        if (!out) throw EmitError("emit: cannot open '" + path + "' for writing");
        out << body;
        out.flush();
        if (!out) throw EmitError("emit: write failed for '" + path + "'");
    }
    return body.size();
}

}  // namespace steklov
