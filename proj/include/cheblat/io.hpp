#ifndef CHEBLAT_IO_HPP
#define CHEBLAT_IO_HPP

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace cheblat {

// Fixed 17-significant-digit rendering; identical inputs give identical bytes.
std::string fmt_g17(double v);

void write_text_file(const std::string& path, const std::string& contents);
std::string read_text_file(const std::string& path);

namespace json {

// Minimal JSON document builder used for every emitted report. Object keys
// keep insertion order and doubles render via fmt_g17, so reports from the
// same config and seed are byte-identical.
class Value {
 public:
  Value() : type_(Type::Null) {}
  explicit Value(bool b) : type_(Type::Bool), bool_(b) {}
  explicit Value(long long i) : type_(Type::Int), int_(i) {}
  explicit Value(double d) : type_(Type::Double), double_(d) {}
  explicit Value(std::string s) : type_(Type::String), str_(std::move(s)) {}
  explicit Value(const char* s) : type_(Type::String), str_(s) {}

  static Value object() { Value v; v.type_ = Type::Object; return v; }
  static Value array() { Value v; v.type_ = Type::Array; return v; }

  void set(const std::string& key, Value v);  // object members, insertion order
  void push_back(Value v);                    // array elements

  std::string dump(int indent = 0) const;

 private:
  enum class Type { Null, Bool, Int, Double, String, Object, Array };
  void dump_to(std::string& out, int indent, int depth) const;

  Type type_;
  bool bool_ = false;
  long long int_ = 0;
  double double_ = 0.0;
  std::string str_;
  std::vector<std::pair<std::string, Value>> members_;
  std::vector<Value> elements_;
};

std::string escape(const std::string& s);

}  // namespace json

namespace csv {

// RFC 4180 framing: CRLF row terminators, quoting only when required.
std::string field(const std::string& s);
std::string row(const std::vector<std::string>& fields);

}  // namespace csv

}  // namespace cheblat

#endif
