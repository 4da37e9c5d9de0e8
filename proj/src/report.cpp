#include "sendov/report.hpp"

#include <cmath>
#include <cstdio>

namespace sendov::report {

std::string format_double(double d) {
    if (!std::isfinite(d)) return "null";
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", d);
    return buf;
}

namespace {

void escape_into(std::string& out, const std::string& s) {
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
                    std::snprintf(buf, sizeof(buf), "\\u%04x", ch);
                    out += buf;
                } else {
                    out += ch;
                }
        }
    }
    out += '"';
}

}  // namespace

Value Value::boolean(bool b) {
    Value v;
    v.type_ = Type::Bool;
    v.b_ = b;
    return v;
}

Value Value::integer(long long i) {
    Value v;
    v.type_ = Type::Int;
    v.i_ = i;
    return v;
}

Value Value::number(double d) {
    Value v;
    v.type_ = Type::Num;
    v.d_ = d;
    return v;
}

Value Value::str(std::string s) {
    Value v;
    v.type_ = Type::Str;
    v.s_ = std::move(s);
    return v;
}

Value Value::array() {
    Value v;
    v.type_ = Type::Arr;
    return v;
}

Value Value::object() {
    Value v;
    v.type_ = Type::Obj;
    return v;
}

Value Value::complex_pair(std::complex<double> z) {
    Value v = array();
    v.push(number(z.real()));
    v.push(number(z.imag()));
    return v;
}

Value& Value::push(Value v) {
    arr_.push_back(std::move(v));
    return *this;
}

Value& Value::set(std::string key, Value v) {
    obj_.emplace_back(std::move(key), std::move(v));
    return *this;
}

void Value::write(std::string& out, int indent, int depth) const {
    const std::string pad(static_cast<std::size_t>(indent * (depth + 1)), ' ');
    const std::string close_pad(static_cast<std::size_t>(indent * depth), ' ');
    switch (type_) {
        case Type::Null: out += "null"; break;
        case Type::Bool: out += b_ ? "true" : "false"; break;
        case Type::Int: out += std::to_string(i_); break;
        case Type::Num: out += format_double(d_); break;
        case Type::Str: escape_into(out, s_); break;
        case Type::Arr: {
            // short numeric arrays (complex pairs and the like) stay on one line
            bool flat = true;
            for (const auto& v : arr_) {
                if (v.type_ == Type::Arr || v.type_ == Type::Obj) flat = false;
            }
            if (arr_.empty()) {
                out += "[]";
            } else if (flat && arr_.size() <= 4) {
                out += '[';
                for (std::size_t i = 0; i < arr_.size(); ++i) {
                    if (i) out += ", ";
                    arr_[i].write(out, indent, depth);
                }
                out += ']';
            } else {
                out += "[\n";
                for (std::size_t i = 0; i < arr_.size(); ++i) {
                    out += pad;
                    arr_[i].write(out, indent, depth + 1);
                    if (i + 1 < arr_.size()) out += ',';
                    out += '\n';
                }
                out += close_pad + "]";
            }
            break;
        }
        case Type::Obj: {
            if (obj_.empty()) {
                out += "{}";
                break;
            }
            out += "{\n";
            for (std::size_t i = 0; i < obj_.size(); ++i) {
                out += pad;
                escape_into(out, obj_[i].first);
                out += ": ";
                obj_[i].second.write(out, indent, depth + 1);
                if (i + 1 < obj_.size()) out += ',';
                out += '\n';
            }
            out += close_pad + "}";
            break;
        }
    }
}

std::string Value::dump(int indent) const {
    std::string out;
    write(out, indent, 0);
    return out;
}

Csv::Csv(std::vector<std::string> header) : width_(header.size()) {
    rows_.push_back(std::move(header));
}

void Csv::row(std::vector<std::string> cells) {
    if (cells.size() != width_) {
        throw std::invalid_argument("csv row width mismatch");
    }
    rows_.push_back(std::move(cells));
}

std::string Csv::str() const {
    std::string out;
    for (const auto& r : rows_) {
        for (std::size_t i = 0; i < r.size(); ++i) {
            if (i) out += ',';
            out += r[i];
        }
        out += '\n';
    }
    return out;
}

std::string Csv::num(double d) { return format_double(d); }
std::string Csv::integer(long long i) { return std::to_string(i); }
std::string Csv::boolean(bool b) { return b ? "true" : "false"; }

}  // namespace sendov::report
