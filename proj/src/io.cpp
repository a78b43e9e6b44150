#include "heislor/io.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include <fmt/format.h>

#include "heislor/errors.hpp"

namespace heislor::io {

namespace {

void write_json_string(std::ostream& os, const std::string& s) {
  os << '"';
  for (char ch : s) {
    switch (ch) {
      case '"': os << "\\\""; break;
      case '\\': os << "\\\\"; break;
      case '\n': os << "\\n"; break;
      case '\t': os << "\\t"; break;
      case '\r': os << "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          os << fmt::format("\\u{:04x}", static_cast<int>(ch));
        } else {
          os << ch;
        }
    }
  }
  os << '"';
}

}  // namespace

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  return fmt::format("{:.17g}", v);
}

void write_csv(std::ostream& os, const Table& table) {
  for (std::size_t i = 0; i < table.columns.size(); ++i) os << (i ? "," : "") << table.columns[i];
  os << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) os << ',';
      if (const auto* d = std::get_if<double>(&row[i])) {
        os << format_number(*d);
      } else {
        os << std::get<std::string>(row[i]);
      }
    }
    os << '\n';
  }
}

Json Json::point(const GroupElement& q) { return Array{q.x, q.y, q.z}; }

Json Json::numbers(const std::vector<double>& v) {
  Array a;
  a.reserve(v.size());
  for (double x : v) a.emplace_back(x);
  return a;
}

void Json::dump(std::ostream& os) const {
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::monostate>) {
          os << "null";
        } else if constexpr (std::is_same_v<T, double>) {
          if (std::isfinite(v)) {
            os << format_number(v);
          } else {
            os << "null";
          }
        } else if constexpr (std::is_same_v<T, bool>) {
          os << (v ? "true" : "false");
        } else if constexpr (std::is_same_v<T, std::string>) {
          write_json_string(os, v);
        } else if constexpr (std::is_same_v<T, std::shared_ptr<Array>>) {
          os << '[';
          for (std::size_t i = 0; i < v->size(); ++i) {
            if (i) os << ',';
            (*v)[i].dump(os);
          }
          os << ']';
        } else {
          os << '{';
          for (std::size_t i = 0; i < v->size(); ++i) {
            if (i) os << ',';
            write_json_string(os, (*v)[i].first);
            os << ':';
            (*v)[i].second.dump(os);
          }
          os << '}';
        }
      },
      value_);
}

std::string Json::dump() const {
  std::ostringstream os;
  dump(os);
  return os.str();
}

void write_obj(std::ostream& os, const std::vector<GroupElement>& vertices, int rows, int cols, bool wrap_cols,
               int sheets) {
  if (rows < 1 || cols < 1 || sheets < 1 ||
      vertices.size() != static_cast<std::size_t>(sheets) * static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols)) {
    throw InvalidArgument("write_obj: vertex count does not match the grid");
  }
  for (const auto& v : vertices) {
    os << "v " << format_number(v.x) << ' ' << format_number(v.y) << ' ' << format_number(v.z) << '\n';
  }
  const int col_faces = wrap_cols && cols > 2 ? cols : cols - 1;
  for (int s = 0; s < sheets; ++s) {
    const long base = static_cast<long>(s) * rows * cols + 1;  // OBJ indices are 1-based
    for (int i = 0; i + 1 < rows; ++i) {
      for (int j = 0; j < col_faces; ++j) {
        const int jn = (j + 1) % cols;
        const long a = base + static_cast<long>(i) * cols + j;
        const long b = base + static_cast<long>(i) * cols + jn;
        const long c = base + static_cast<long>(i + 1) * cols + jn;
        const long d = base + static_cast<long>(i + 1) * cols + j;
        os << "f " << a << ' ' << b << ' ' << c << ' ' << d << '\n';
      }
    }
  }
}

}  // namespace heislor::io
