#ifndef HEUNTRA_IO_HPP
#define HEUNTRA_IO_HPP

// Parameter documents, deterministic JSON output and CSV writers.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "heuntra/error.hpp"
#include "heuntra/params.hpp"
#include "heuntra/solver.hpp"
#include "heuntra/tridiag.hpp"

namespace heuntra {

using ojson = nlohmann::ordered_json;

/// Malformed input documents and unreadable files.
class InputError : public Error {
 public:
  using Error::Error;
};

struct ParamsDocument {
  HeunParams params;
  std::optional<SolutionCase> kase;
};

/// Parses a document with numeric keys a, b, c, d, A, B, C, D, E and an
/// optional "case"; unknown keys are rejected.
inline ParamsDocument parse_params(const std::string& text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
  if (!j.is_object()) throw InputError("parameter document must be a JSON object");
  ParamsDocument doc;
  const char* keys[] = {"a", "b", "c", "d", "A", "B", "C", "D", "E"};
  double* slots[] = {&doc.params.a, &doc.params.b, &doc.params.c, &doc.params.d, &doc.params.A,
                     &doc.params.B, &doc.params.C, &doc.params.D, &doc.params.E};
  for (std::size_t i = 0; i < 9; ++i) {
    if (!j.contains(keys[i])) throw InputError(std::string("missing key '") + keys[i] + "'");
    if (!j[keys[i]].is_number()) throw InputError(std::string("key '") + keys[i] + "' must be a number");
    *slots[i] = j[keys[i]].get<double>();
  }
  for (const auto& item : j.items()) {
    const std::string& k = item.key();
    bool known = k == "case";
    for (const char* name : keys) known = known || k == name;
    if (!known) throw InputError("unknown key '" + k + "'");
  }
  if (j.contains("case")) {
    if (!j["case"].is_string()) throw InputError("key 'case' must be a string");
    try {
      doc.kase = parse_case(j["case"].get<std::string>());
    } catch (const Error& e) {
      throw InputError(e.what());
    }
  }
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline ParamsDocument load_params(const std::string& path) { return parse_params(read_file(path)); }

/// Fixed 17-significant-digit formatting; non-finite values become null.
inline std::string format_double(double v) {
  if (!std::isfinite(v)) return "null";
  if (v == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

namespace detail {

inline void write_json(std::ostream& os, const ojson& j, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  const std::string inner(static_cast<std::size_t>(indent + 1) * 2, ' ');
  switch (j.type()) {
    case ojson::value_t::object: {
      if (j.empty()) {
        os << "{}";
        return;
      }
      os << "{\n";
      bool first = true;
      for (const auto& item : j.items()) {
        if (!first) os << ",\n";
        first = false;
        os << inner << ojson(item.key()).dump() << ": ";
        write_json(os, item.value(), indent + 1);
      }
      os << "\n" << pad << "}";
      return;
    }
    case ojson::value_t::array: {
      if (j.empty()) {
        os << "[]";
        return;
      }
      bool scalars = true;
      for (const auto& v : j) scalars = scalars && !v.is_structured();
      if (scalars) {
        os << "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) os << ", ";
          write_json(os, j[i], indent + 1);
        }
        os << "]";
        return;
      }
      os << "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) os << ",\n";
        os << inner;
        write_json(os, j[i], indent + 1);
      }
      os << "\n" << pad << "]";
      return;
    }
    case ojson::value_t::number_float: os << format_double(j.get<double>()); return;
    default: os << j.dump(); return;
  }
}

}  // namespace detail

inline std::string to_json_text(const ojson& j) {
  std::ostringstream os;
  detail::write_json(os, j, 0);
  os << "\n";
  return os.str();
}

inline ojson params_json(const HeunParams& p) {
  return ojson{{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"A", p.A},
               {"B", p.B}, {"C", p.C}, {"D", p.D}, {"E", p.E}};
}

inline ojson basis_json(const HeunParams& p, const BasisParams& bp) {
  ojson j{{"alpha", bp.alpha}, {"beta", bp.beta}, {"gamma", bp.gamma}, {"mu", bp.mu},
          {"nu", bp.nu},       {"case", case_tag(bp.kase)}, {"R", compute_R(p)}};
  if (!bp.notes.empty()) j["notes"] = bp.notes;
  return j;
}

inline ojson spectrum_json(const SpectrumReport& rep) {
  ojson j;
  j["variable"] = rep.variable;
  j["truncation_sizes"] = rep.truncation_sizes;
  j["tolerance"] = rep.tolerance;
  j["classification"] = rep.classification;
  j["continuous_indicator"] = rep.continuous_indicator;
  j["discrete_points"] = rep.discrete_points;
  j["embedded_points"] = rep.embedded_points;
  j["warnings"] = rep.warnings;
  return j;
}

inline ojson solution_json(const SeriesSolution& s) {
  ojson j;
  j["class"] = class_name(s.klass);
  j["formal"] = s.formal;
  j["normalization"] = normalization_name(s.normalization);
  if (s.k) j["k"] = *s.k;
  if (s.z) j["z"] = *s.z;
  j["params"] = params_json(s.params);
  j["basis"] = basis_json(s.params, s.basis);
  j["truncation"] = s.order();
  j["scale"] = s.scale;
  j["coefficients"] = s.coeffs;
  j["polynomials"] = s.polynomials;
  if (!s.quantized_name.empty()) {
    j["quantized"] = ojson{{"name", s.quantized_name}, {"value", s.quantized_value}};
    j["E_k"] = s.energy;
    j["E_k_closed_form"] = s.printed_energy;
  }
  j["notes"] = s.notes;
  return j;
}

inline ojson residual_json(const ResidualReport& r, const GridSpec& g) {
  return ojson{{"norm", r.norm},
               {"relative_norm", r.relative_norm},
               {"grid_points", static_cast<long>(r.grid.size())},
               {"requested_points", g.points},
               {"delta", g.delta},
               {"excluded", r.excluded_neighborhoods}};
}

/// CSV with a header row and 17-digit numbers.
inline void write_csv(std::ostream& os, const std::vector<std::string>& header,
                      const std::vector<std::vector<double>>& rows) {
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << "\n";
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << format_double(r[i]);
    os << "\n";
  }
}

}  // namespace heuntra

#endif  // HEUNTRA_IO_HPP
