#include "trieig/json_writer.hpp"

#include <cmath>
#include <cstdio>

namespace trieig {

namespace {

void write_value(std::ostream& os, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (v.type()) {
    case Json::value_t::object: {
      if (v.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (auto it = v.begin(); it != v.end(); ++it) {
        if (!first) os << ",\n";
        first = false;
        os << inner << Json(it.key()).dump() << ": ";
        write_value(os, it.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case Json::value_t::array: {
      if (v.empty()) {
        os << "[]";
        return;
      }
      os << "[\n";
      bool first = true;
      for (const Json& item : v) {
        if (!first) os << ",\n";
        first = false;
        os << inner;
        write_value(os, item, indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case Json::value_t::number_float: {
      const double d = v.get<double>();
      os << (std::isfinite(d) ? format_number(d) : "null");
      return;
    }
    default:
      os << v.dump();
  }
}

}  // namespace

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_json(std::ostream& os, const Json& doc) {
  write_value(os, doc, 0);
  os << "\n";
}

}  // namespace trieig
