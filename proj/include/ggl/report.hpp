#ifndef GGL_REPORT_HPP
#define GGL_REPORT_HPP

// Tabular reports: a fixed column list per command and rows of numbers or
// strings, written as CSV or as a JSON array of objects. Doubles use the
// shortest decimal that round-trips, so output is byte-stable.

#include <json.hpp>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <type_traits>
#include <variant>
#include <vector>

namespace ggl {

using Cell = std::variant<double, std::int64_t, std::uint64_t, std::string>;

inline std::string format_number(double v) {
   if (std::isnan(v)) return "nan";
   if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
   char buf[64];
   const auto res = std::to_chars(buf, buf + sizeof buf, v);
   if (res.ec != std::errc{}) throw std::runtime_error("format_number: to_chars failed");
   return {buf, res.ptr};
}

inline std::string format_cell(const Cell& c) {
   struct Visitor {
      std::string operator()(double v) const { return format_number(v); }
      std::string operator()(std::int64_t v) const { return std::to_string(v); }
      std::string operator()(std::uint64_t v) const { return std::to_string(v); }
      std::string operator()(const std::string& s) const { return s; }
   };
   return std::visit(Visitor{}, c);
}

class Report {
public:
   Report() = default;
   explicit Report(std::vector<std::string> columns) : columns_(std::move(columns)) {}

   const std::vector<std::string>& columns() const noexcept { return columns_; }
   const std::vector<std::vector<Cell>>& rows() const noexcept { return rows_; }

   void add_row(std::vector<Cell> row) {
      if (row.size() != columns_.size())
         throw std::logic_error("Report::add_row: expected " + std::to_string(columns_.size()) +
                                " cells, got " + std::to_string(row.size()));
      rows_.push_back(std::move(row));
   }

   std::size_t column_index(const std::string& name) const {
      for (std::size_t i = 0; i < columns_.size(); ++i)
         if (columns_[i] == name) return i;
      throw std::out_of_range("Report: no column named " + name);
   }

   /// Numeric value of a cell; strings are rejected.
   double number(std::size_t row, const std::string& column) const {
      const Cell& c = rows_.at(row).at(column_index(column));
      if (const auto* d = std::get_if<double>(&c)) return *d;
      if (const auto* i = std::get_if<std::int64_t>(&c)) return static_cast<double>(*i);
      if (const auto* u = std::get_if<std::uint64_t>(&c)) return static_cast<double>(*u);
      throw std::invalid_argument("Report: column " + column + " is not numeric");
   }

   const Cell& cell(std::size_t row, const std::string& column) const {
      return rows_.at(row).at(column_index(column));
   }

private:
   std::vector<std::string> columns_;
   std::vector<std::vector<Cell>> rows_;
};

inline std::string csv_escape(const std::string& field) {
   if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
   std::string out = "\"";
   for (const char ch : field) {
      if (ch == '"') out += '"';
      out += ch;
   }
   out += '"';
   return out;
}

inline void write_csv(std::ostream& os, const Report& report) {
   const auto& cols = report.columns();
   for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i]);
   os << '\n';
   for (const auto& row : report.rows()) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_escape(format_cell(row[i]));
      os << '\n';
   }
}

inline nlohmann::ordered_json to_json(const Report& report) {
   auto arr = nlohmann::ordered_json::array();
   for (const auto& row : report.rows()) {
      nlohmann::ordered_json obj = nlohmann::ordered_json::object();
      for (std::size_t i = 0; i < row.size(); ++i) {
         const auto& key = report.columns()[i];
         std::visit(
             [&](const auto& v) {
                using V = std::decay_t<decltype(v)>;
                if constexpr (std::is_same_v<V, double>) {
                   // JSON has no NaN/Inf; keep them as strings.
                   if (std::isfinite(v))
                      obj[key] = v;
                   else
                      obj[key] = format_number(v);
                } else {
                   obj[key] = v;
                }
             },
             row[i]);
      }
      arr.push_back(std::move(obj));
   }
   return arr;
}

inline void write_json(std::ostream& os, const Report& report) { os << to_json(report).dump(2) << '\n'; }

}  // namespace ggl

#endif
