#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace sendov::report {

/// Minimal JSON document with insertion-ordered objects and all floating
/// point printed with 17 significant digits, so that repeated runs emit
/// byte-identical reports and every value re-parses exactly.
class Value {
  public:
    enum class Type { Null, Bool, Int, Num, Str, Arr, Obj };

    Value() = default;

    static Value boolean(bool b);
    static Value integer(long long i);
    static Value number(double d);
    static Value str(std::string s);
    static Value array();
    static Value object();
    static Value complex_pair(std::complex<double> z);  // [re, im]

    Type type() const { return type_; }

    Value& push(Value v);                        // arrays
    Value& set(std::string key, Value v);        // objects

    std::string dump(int indent = 2) const;

  private:
    Type type_ = Type::Null;
    bool b_ = false;
    long long i_ = 0;
    double d_ = 0.0;
    std::string s_;
    std::vector<Value> arr_;
    std::vector<std::pair<std::string, Value>> obj_;

    void write(std::string& out, int indent, int depth) const;
};

/// %.17g with non-finite values mapped to null (they never appear in valid
/// reports).
std::string format_double(double d);

/// CSV table with a header row; numbers formatted as in the JSON reports.
class Csv {
  public:
    explicit Csv(std::vector<std::string> header);

    void row(std::vector<std::string> cells);
    std::string str() const;

    static std::string num(double d);
    static std::string integer(long long i);
    static std::string boolean(bool b);

  private:
    std::size_t width_;
    std::vector<std::vector<std::string>> rows_;
};

}  // namespace sendov::report
