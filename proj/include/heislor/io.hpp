#pragma once

// Serialization of results: CSV tables, a small ordered JSON value, and
// Wavefront OBJ grids. Every number is written with 17 significant digits
// ("%.17g"), which round-trips IEEE doubles exactly; non-finite numbers become
// "nan"/"inf"/"-inf" in CSV and null in JSON.

#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "heislor/group.hpp"

namespace heislor::io {

std::string format_number(double v);

struct Table {
  std::vector<std::string> columns;
  /// Each cell is a number or a string (strings are written verbatim; they
  /// must not contain commas, quotes or newlines).
  using Cell = std::variant<double, std::string>;
  std::vector<std::vector<Cell>> rows;
};

void write_csv(std::ostream& os, const Table& table);

class Json {
 public:
  using Array = std::vector<Json>;
  using Object = std::vector<std::pair<std::string, Json>>;  // insertion-ordered

  Json() = default;  // null
  Json(double v) : value_(v) {}                 // NOLINT
  Json(int v) : value_(static_cast<double>(v)) {}  // NOLINT
  Json(bool v) : value_(v) {}                   // NOLINT
  Json(const char* v) : value_(std::string(v)) {}  // NOLINT
  Json(std::string v) : value_(std::move(v)) {}  // NOLINT
  Json(Array v) : value_(std::make_shared<Array>(std::move(v))) {}    // NOLINT
  Json(Object v) : value_(std::make_shared<Object>(std::move(v))) {}  // NOLINT

  static Json point(const GroupElement& q);
  static Json numbers(const std::vector<double>& v);

  void dump(std::ostream& os) const;
  std::string dump() const;

 private:
  std::variant<std::monostate, double, bool, std::string, std::shared_ptr<Array>, std::shared_ptr<Object>> value_;
};

/// `v x y z` lines followed by quad faces over `sheets` stacked rows x cols
/// row-major grids (faces never join two sheets). With `wrap_cols`, the last
/// column connects back to the first.
/// Throws InvalidArgument if vertices.size() != sheets * rows * cols.
void write_obj(std::ostream& os, const std::vector<GroupElement>& vertices, int rows, int cols,
               bool wrap_cols = false, int sheets = 1);

}  // namespace heislor::io
