#include "interlink/record.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace interlink
{

namespace
{

void write_string(std::ostream& os, const std::string& s)
{
    os << '"';
    for (const char c : s) {
        switch (c) {
        case '"': os << "\\\""; break;
        case '\\': os << "\\\\"; break;
        case '\n': os << "\\n"; break;
        case '\r': os << "\\r"; break;
        case '\t': os << "\\t"; break;
        default:
            if (static_cast<unsigned char>(c) < 0x20) {
                char buf[8];
                std::snprintf(buf, sizeof buf, "\\u%04x", static_cast<unsigned>(c));
                os << buf;
            } else {
                os << c;
            }
        }
    }
    os << '"';
}

template <class... Ts>
struct Overloaded : Ts...
{
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

} // namespace

std::string format_real(double x)
{
    if (std::isnan(x)) {
        return "NaN";
    }
    if (std::isinf(x)) {
        return x > 0 ? "Infinity" : "-Infinity";
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

Value::Value(std::complex<double> z) : data_(Object{{"im", Value(z.imag())}, {"re", Value(z.real())}}) {}

void Value::write_json(std::ostream& os) const
{
    std::visit(Overloaded{
                   [&](std::monostate) { os << "null"; },
                   [&](bool b) { os << (b ? "true" : "false"); },
                   [&](double x) {
                       // JSON has no non-finite numbers; those travel as strings.
                       if (std::isfinite(x)) {
                           os << format_real(x);
                       } else {
                           write_string(os, format_real(x));
                       }
                   },
                   [&](const Integer& n) { os << n.digits; },
                   [&](const std::string& s) { write_string(os, s); },
                   [&](const Array& a) {
                       os << '[';
                       for (std::size_t i = 0; i < a.size(); ++i) {
                           if (i > 0) {
                               os << ',';
                           }
                           a[i].write_json(os);
                       }
                       os << ']';
                   },
                   [&](const Object& o) {
                       os << '{';
                       bool first = true;
                       for (const auto& [key, value] : o) {
                           if (!first) {
                               os << ',';
                           }
                           first = false;
                           write_string(os, key);
                           os << ':';
                           value.write_json(os);
                       }
                       os << '}';
                   },
               },
               data_);
}

std::string Value::csv_cell() const
{
    if (const auto* x = std::get_if<double>(&data_)) {
        return format_real(*x);
    }
    if (const auto* n = std::get_if<Integer>(&data_)) {
        return n->digits;
    }
    if (const auto* s = std::get_if<std::string>(&data_)) {
        return *s;
    }
    if (const auto* b = std::get_if<bool>(&data_)) {
        return *b ? "true" : "false";
    }
    if (std::holds_alternative<std::monostate>(data_)) {
        return "";
    }
    std::ostringstream os;
    write_json(os);
    return os.str();
}

void write_jsonl(std::ostream& os, const OutputRecord& record)
{
    os << "{\"command\":";
    write_string(os, record.command);
    os << ",\"inputs\":";
    Value(record.inputs).write_json(os);
    os << ",\"outputs\":";
    Value(record.outputs).write_json(os);
    os << ",\"residuals\":";
    Value(record.residuals).write_json(os);
    os << ",\"provenance\":";
    write_string(os, record.provenance);
    os << "}\n";
}

std::string to_json(const OutputRecord& record)
{
    std::ostringstream os;
    write_jsonl(os, record);
    return os.str();
}

void write_csv(std::ostream& os, const Table& table)
{
    auto cell = [&](const std::string& text) {
        if (text.find_first_of(",\"\n\r") == std::string::npos) {
            os << text;
            return;
        }
        os << '"';
        for (const char c : text) {
            if (c == '"') {
                os << '"';
            }
            os << c;
        }
        os << '"';
    };
    for (std::size_t i = 0; i < table.header.size(); ++i) {
        if (i > 0) {
            os << ',';
        }
        cell(table.header[i]);
    }
    os << '\n';
    for (const auto& row : table.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i > 0) {
                os << ',';
            }
            cell(row[i].csv_cell());
        }
        os << '\n';
    }
}

} // namespace interlink
