#pragma once

#include <complex>
#include <cstdint>
#include <map>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "interlink/power_series.hpp"

namespace interlink
{

// JSON-like value. Exact integers keep their decimal digits; reals print with 17 significant digits.
class Value
{
public:
    struct Integer
    {
        std::string digits;
    };
    using Array = std::vector<Value>;
    using Object = std::map<std::string, Value>;

    Value() : data_(std::monostate{}) {}
    Value(bool b) : data_(b) {}
    Value(double x) : data_(x) {}
    Value(int n) : data_(Integer{std::to_string(n)}) {}
    Value(long n) : data_(Integer{std::to_string(n)}) {}
    Value(unsigned n) : data_(Integer{std::to_string(n)}) {}
    Value(unsigned long n) : data_(Integer{std::to_string(n)}) {}
    Value(const BigCount& n) : data_(Integer{to_string(n)}) {}
    // Rationals are emitted as "p/q" strings.
    Value(const BigRational& r) : data_(to_string(r)) {}
    Value(std::string s) : data_(std::move(s)) {}
    Value(const char* s) : data_(std::string(s)) {}
    // Complex numbers become {"im": ..., "re": ...}.
    Value(std::complex<double> z);
    Value(Array a) : data_(std::move(a)) {}
    Value(Object o) : data_(std::move(o)) {}

    void write_json(std::ostream& os) const;
    // Scalar rendering for CSV cells; arrays and objects fall back to JSON.
    std::string csv_cell() const;

private:
    std::variant<std::monostate, bool, double, Integer, std::string, Array, Object> data_;
};

std::string format_real(double x);

struct OutputRecord
{
    std::string command;
    Value::Object inputs;
    Value::Object outputs;
    Value::Object residuals;
    std::string provenance;
};

// One line of JSON, keys in a fixed order: command, inputs, outputs, residuals, provenance.
void write_jsonl(std::ostream& os, const OutputRecord& record);
std::string to_json(const OutputRecord& record);

struct Table
{
    std::vector<std::string> header;
    std::vector<std::vector<Value>> rows;
};

// RFC 4180 style: comma separated, quoted only when a cell needs it, "\n" line ends.
void write_csv(std::ostream& os, const Table& table);

} // namespace interlink
