#include "primenf/serialize.hpp"

#include <fstream>
#include <sstream>

#include "primenf/errors.hpp"

namespace primenf {

using nlohmann::json;

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "text") return Format::text;
  if (name == "csv") return Format::csv;
  throw ValidationError("unknown format '" + name + "'");
}

json matrix_to_json(const IntMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

namespace {

Integer parse_entry(const json& cell) {
  if (cell.is_number_integer()) {
    return cell.is_number_unsigned() ? Integer(cell.get<unsigned long>())
                                     : Integer(cell.get<long>());
  }
  if (!cell.is_string()) throw ValidationError("matrix entries must be integer strings");
  const auto& s = cell.get_ref<const std::string&>();
  std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (start == s.size() || s.find_first_not_of("0123456789", start) != std::string::npos) {
    throw ValidationError("'" + s + "' is not a decimal integer");
  }
  return Integer(s[0] == '+' ? s.substr(1) : s, 10);
}

std::string join_ints(const std::vector<int>& v, char sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

}  // namespace

IntMatrix matrix_from_json(const json& j) {
  if (!j.is_array()) throw ValidationError("matrix must be a JSON array of rows");
  std::vector<std::vector<Integer>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw ValidationError("matrix rows must be arrays");
    std::vector<Integer> r;
    for (const auto& cell : row) r.push_back(parse_entry(cell));
    rows.push_back(std::move(r));
  }
  return IntMatrix::from_rows(rows);
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ValidationError(path + ": " + e.what());
  }
  return matrix_from_json(j);
}

json word_to_json(const Word& w) { return word_tokens(w); }

json class_to_json(const ConjugacyClass& cls) {
  return {{"p", cls.p}, {"n", cls.n}, {"g0", cls.g0}, {"genus", cls.genus}, {"t", cls.t()}};
}

json presentation_to_json(const Presentation& pres) {
  json gens = json::array();
  for (const auto& g : pres.generators) gens.push_back(format_generator(g));
  return {{"generators", gens},
          {"relation", word_to_json(pres.relation)},
          {"qhat", word_to_json(pres.qhat)},
          {"lrhat", word_to_json(pres.lrhat)}};
}

json step_to_json(const StepRecord& s, std::size_t index) {
  return {{"step", index + 1},
          {"a", format_letter(s.a)},
          {"b", format_letter(s.b)},
          {"w_lengths", s.w_lengths},
          {"shortcut", s.shortcut},
          {"M", word_to_json(s.m_word)},
          {"N", word_to_json(s.n_word)},
          {"B", {{"columns", {s.a_slot, s.b_slot}},
                 {"values", {s.m_column, s.n_column}},
                 {"det", s.det},
                 {"changed_columns", s.changed_columns}}}};
}

json result_to_json(const NormalFormResult& r, bool with_steps) {
  json basis = json::array();
  for (const auto& w : r.basis) basis.push_back(format_word(w));
  json out = {{"p", r.input.p},
              {"n", r.input.n},
              {"g0", r.input.g0},
              {"genus", r.input.genus},
              {"t", r.input.t()},
              {"power", r.power},
              {"matrix", matrix_to_json(r.matrix)},
              {"trace", r.trace.get_si()},
              {"order", r.order},
              {"symplectic", r.symplectic},
              {"relation", word_to_json(r.relation)},
              {"basis", basis}};
  if (with_steps) {
    json steps = json::array();
    for (std::size_t i = 0; i < r.steps.size(); ++i) steps.push_back(step_to_json(r.steps[i], i));
    out["steps"] = steps;
  }
  return out;
}

json verdict_to_json(const CandidateVerdict& v) {
  json poly = json::array();
  for (const auto& c : v.characteristic_polynomial) poly.push_back(c.get_str());
  auto classes = [](const std::vector<ConjugacyClass>& list) {
    json arr = json::array();
    for (const auto& c : list) arr.push_back(class_to_json(c));
    return arr;
  };
  json out = {{"genus", v.genus},
              {"order", v.order},
              {"trace", v.trace.get_str()},
              {"t", v.t ? json(*v.t) : json(nullptr)},
              {"characteristic_polynomial", poly},
              {"admissible", classes(v.admissible)},
              {"charpoly_matches", classes(v.charpoly_matches)},
              {"exact_matches", classes(v.exact_matches)},
              {"verdict", to_string(v.verdict)},
              {"reason", v.reason}};
  return out;
}

namespace {

const char* kCsvHeader = "p,genus,g0,t,n,power,trace,order,symplectic\n";

std::string csv_row(const NormalFormResult& r) {
  std::ostringstream out;
  out << r.input.p << ',' << r.input.genus << ',' << r.input.g0 << ',' << r.input.t() << ','
      << join_ints(r.input.n, ' ') << ',' << r.power << ',' << r.trace.get_str() << ','
      << r.order << ',' << (r.symplectic ? "true" : "false") << '\n';
  return out.str();
}

std::string text_block(const NormalFormResult& r, bool with_steps) {
  std::ostringstream out;
  out << "class: p=" << r.input.p << " n=(" << join_ints(r.input.n, ',') << ") g0="
      << r.input.g0 << " genus=" << r.input.genus << " t=" << r.input.t() << '\n';
  out << "normalized: n=(" << join_ints(r.normalized.n, ',') << ") power=" << r.power << '\n';
  out << "order=" << r.order << " trace=" << r.trace.get_str()
      << " symplectic=" << (r.symplectic ? "yes" : "no") << '\n';
  out << "matrix:\n" << r.matrix.to_string();
  out << "relation: " << format_word(r.relation) << '\n';
  out << "basis:\n";
  for (std::size_t i = 0; i < r.basis.size(); ++i) {
    out << "  " << i + 1 << ": " << format_word(r.basis[i]) << '\n';
  }
  if (with_steps) {
    for (std::size_t i = 0; i < r.steps.size(); ++i) {
      const auto& s = r.steps[i];
      out << "step " << i + 1 << ": a=" << format_letter(s.a) << " b=" << format_letter(s.b)
          << (s.shortcut ? " (tight)" : "") << "\n  M = " << format_word(s.m_word)
          << "\n  N = " << format_word(s.n_word) << '\n';
    }
  }
  return out.str();
}

}  // namespace

std::string render(const NormalFormResult& r, Format format, bool with_steps) {
  switch (format) {
    case Format::json:
      return result_to_json(r, with_steps).dump(2) + "\n";
    case Format::csv:
      return std::string(kCsvHeader) + csv_row(r);
    case Format::text:
      return text_block(r, with_steps);
  }
  return {};
}

std::string render_classes(const std::vector<NormalFormResult>& results, Format format) {
  if (format == Format::json) {
    json arr = json::array();
    for (const auto& r : results) arr.push_back(result_to_json(r));
    return arr.dump(2) + "\n";
  }
  if (format == Format::csv) {
    std::string out = kCsvHeader;
    for (const auto& r : results) out += csv_row(r);
    return out;
  }
  std::string out;
  for (const auto& r : results) out += text_block(r, false) + "\n";
  return out;
}

std::string render_verdict(const CandidateVerdict& v, Format format) {
  if (format == Format::json) return verdict_to_json(v).dump(2) + "\n";
  std::ostringstream out;
  out << "verdict: " << to_string(v.verdict) << " (" << v.reason << ")\n";
  out << "genus=" << v.genus << " order=" << v.order << " trace=" << v.trace.get_str();
  if (v.t) out << " t=" << *v.t;
  out << "\nadmissible classes: " << v.admissible.size()
      << ", char-poly matches: " << v.charpoly_matches.size()
      << ", exact matches: " << v.exact_matches.size() << '\n';
  for (const auto& c : v.exact_matches) {
    out << "  matches p=" << c.p << " n=(" << join_ints(c.n, ',') << ") g0=" << c.g0 << '\n';
  }
  return out.str();
}

}  // namespace primenf
