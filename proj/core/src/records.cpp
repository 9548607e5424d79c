#include "mss/records.hpp"

#include "mss/errors.hpp"

#include <array>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <system_error>

namespace mss {

namespace {

void put_field(std::ostream& out, const std::string& s) {
  if (s.find_first_of(",\n\r\"") != std::string::npos) {
    throw std::invalid_argument("write_csv: field contains a delimiter: '" + s + "'");
  }
  out << s;
}

template <typename T>
void put_number(std::ostream& out, T value) {
  std::array<char, 64> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  if (ec != std::errc{}) throw std::runtime_error("write_csv: number formatting failed");
  out.write(buf.data(), end - buf.data());
}

template <typename T>
T get_number(std::string_view field, std::size_t line, const char* column) {
  T value{};
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    throw ParseError(line, std::string("bad ") + column + " '" + std::string(field) + "'");
  }
  return value;
}

}  // namespace

void write_csv(std::span<const RunRecord> records, std::ostream& out) {
  out << kCsvHeader << '\n';
  for (const RunRecord& r : records) {
    put_field(out, r.problem);
    out << ',';
    put_number(out, static_cast<long long>(r.n));
    out << ',';
    put_field(out, r.solver);
    out << ',' << to_string(r.status) << ',';
    put_number(out, r.time_sec);
    out << ',';
    put_number(out, r.fe);
    out << ',';
    put_number(out, r.ge);
    out << ',';
    put_number(out, r.inner_iters);
    out << ',';
    put_number(out, r.f_final);
    out << ',';
    put_number(out, r.gnorm_final);
    out << '\n';
  }
}

void write_csv(std::span<const RunRecord> records, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  write_csv(records, out);
  if (!out.flush()) throw std::runtime_error("write to '" + path.string() + "' failed");
}

std::vector<RunRecord> read_csv(std::istream& in) {
  std::vector<RunRecord> records;
  std::string line;
  std::size_t lineno = 0;

  if (!std::getline(in, line)) throw ParseError(1, "missing header");
  ++lineno;
  if (line != kCsvHeader) throw ParseError(lineno, "unexpected header '" + line + "'");

  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;

    std::array<std::string_view, 10> fields;
    std::size_t count = 0;
    std::string_view rest = line;
    while (true) {
      const auto comma = rest.find(',');
      if (count == fields.size()) throw ParseError(lineno, "too many fields");
      fields[count++] = rest.substr(0, comma);
      if (comma == std::string_view::npos) break;
      rest.remove_prefix(comma + 1);
    }
    if (count != fields.size()) {
      throw ParseError(lineno, "expected 10 fields, got " + std::to_string(count));
    }

    RunRecord r;
    r.problem = std::string(fields[0]);
    r.n = static_cast<Index>(get_number<long long>(fields[1], lineno, "n"));
    r.solver = std::string(fields[2]);
    try {
      r.status = parse_tr_status(fields[3]);
    } catch (const std::invalid_argument& e) {
      throw ParseError(lineno, e.what());
    }
    r.time_sec = get_number<double>(fields[4], lineno, "time_sec");
    r.fe = get_number<long>(fields[5], lineno, "fe");
    r.ge = get_number<long>(fields[6], lineno, "ge");
    r.inner_iters = get_number<long>(fields[7], lineno, "inner_iters");
    r.f_final = get_number<double>(fields[8], lineno, "f_final");
    r.gnorm_final = get_number<double>(fields[9], lineno, "gnorm_final");
    if (r.problem.empty() || r.solver.empty()) throw ParseError(lineno, "empty name field");
    records.push_back(std::move(r));
  }
  return records;
}

std::vector<RunRecord> read_csv(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "' for reading");
  return read_csv(in);
}

}  // namespace mss
