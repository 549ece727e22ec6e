#include "cesaro/io.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"

namespace cesaro {

namespace {

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

Sequence parse_sequence_text(const std::string& text, Mode mode) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const std::exception& e) {
    throw std::invalid_argument(std::string("sequence parse: ") + e.what());
  }
  if (!j.is_array())
    throw std::invalid_argument("sequence payload must be a JSON array");

  if (mode == Mode::Exact) {
    std::vector<Rational> q;
    q.reserve(j.size());
    for (const auto& el : j) {
      if (el.is_number_integer()) {
        q.emplace_back(el.get<std::int64_t>());
      } else if (el.is_string()) {
        q.push_back(parse_rational(el.get<std::string>()));
      } else {
        throw std::invalid_argument(
            "exact sequences take integers or num/den strings");
      }
    }
    return Sequence(std::move(q));
  }

  std::vector<Complex> f;
  f.reserve(j.size());
  for (const auto& el : j) {
    if (el.is_number()) {
      f.emplace_back(el.get<double>(), 0.0);
    } else if (el.is_string()) {
      f.emplace_back(static_cast<double>(parse_rational(el.get<std::string>())),
                     0.0);
    } else if (el.is_array() && el.size() == 2 && el[0].is_number() &&
               el[1].is_number()) {
      f.emplace_back(el[0].get<double>(), el[1].get<double>());
    } else {
      throw std::invalid_argument(
          "float sequences take reals, [re, im] pairs, or num/den strings");
    }
  }
  return Sequence(std::move(f));
}

Sequence read_sequence_file(const std::string& path, Mode mode) {
  return parse_sequence_text(slurp(path), mode);
}

// ---- writer -------------------------------------------------------------------

namespace {

std::string escape_json(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 2);
  for (char c : s) {
    switch (c) {
      case '"':
        out += "\\\"";
        break;
      case '\\':
        out += "\\\\";
        break;
      case '\n':
        out += "\\n";
        break;
      case '\t':
        out += "\\t";
        break;
      case '\r':
        out += "\\r";
        break;
      default:
        if (static_cast<unsigned char>(c) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", c);
          out += buf;
        } else {
          out += c;
        }
    }
  }
  return out;
}

}  // namespace

void JsonWriter::separate() {
  if (pending_key_) {
    pending_key_ = false;
    return;
  }
  if (!first_in_scope_.empty()) {
    if (first_in_scope_.back())
      first_in_scope_.back() = false;
    else
      out_ << ',';
  }
}

void JsonWriter::begin_object() {
  separate();
  out_ << '{';
  first_in_scope_.push_back(true);
}

void JsonWriter::end_object() {
  out_ << '}';
  first_in_scope_.pop_back();
}

void JsonWriter::begin_array() {
  separate();
  out_ << '[';
  first_in_scope_.push_back(true);
}

void JsonWriter::end_array() {
  out_ << ']';
  first_in_scope_.pop_back();
}

void JsonWriter::key(const std::string& k) {
  separate();
  out_ << '"' << escape_json(k) << "\":";
  pending_key_ = true;
}

void JsonWriter::value(double v) {
  separate();
  if (std::isfinite(v)) {
    out_ << format_real(v);
  } else if (std::isnan(v)) {
    out_ << "\"nan\"";
  } else {
    out_ << (v > 0 ? "\"inf\"" : "\"-inf\"");
  }
}

void JsonWriter::value(const std::string& v) {
  separate();
  out_ << '"' << escape_json(v) << '"';
}

void JsonWriter::value(bool v) {
  separate();
  out_ << (v ? "true" : "false");
}

void JsonWriter::value(std::uint64_t v) {
  separate();
  out_ << v;
}

void JsonWriter::value(std::int64_t v) {
  separate();
  out_ << v;
}

void JsonWriter::value(const Complex& v) {
  separate();
  out_ << '[' << format_real(v.real()) << ',' << format_real(v.imag()) << ']';
}

void JsonWriter::value(const Rational& v) {
  separate();
  out_ << '"' << format_rational(v) << '"';
}

void JsonWriter::raw(const std::string& token) {
  separate();
  out_ << token;
}

void JsonWriter::finish() { out_ << '\n'; }

// ---- payload writers ------------------------------------------------------------

void write_sequence_json(std::ostream& out, const Sequence& x) {
  JsonWriter w(out);
  w.begin_array();
  if (x.mode() == Mode::Float) {
    bool all_real = true;
    for (const auto& v : x.cf())
      if (v.imag() != 0.0) all_real = false;
    for (const auto& v : x.cf()) {
      if (all_real)
        w.value(v.real());
      else
        w.value(v);
    }
  } else {
    for (const auto& v : x.cq()) w.value(v);
  }
  w.end_array();
  w.finish();
}

void write_matrix_csv(std::ostream& out, const MatrixAny& m) {
  const std::size_t n = (m.mode == Mode::Float) ? m.f.n : m.q.n;
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (c) out << ',';
      if (m.mode == Mode::Float)
        out << format_real(m.f.at(r, c));
      else
        out << format_rational(m.q.at(r, c));
    }
    out << '\n';
  }
}

void write_trace_json(std::ostream& out, const ErgodicTrace& tr) {
  JsonWriter w(out);
  w.begin_object();
  w.key("t");
  w.value(tr.t);
  w.key("N");
  w.value(tr.N);
  w.key("raw_norms");
  w.value(tr.raw_norms);
  w.key("steps");
  w.begin_array();
  for (auto s : tr.steps) w.value(s);
  w.end_array();
  w.key("iterate_metric");
  w.begin_array();
  for (auto v : tr.iterate_metric) w.value(v);
  w.end_array();
  w.key("mean_metric");
  w.begin_array();
  for (auto v : tr.mean_metric) w.value(v);
  w.end_array();
  w.key("fitted_rate");
  w.value(tr.fitted_rate);
  w.key("rate_valid");
  w.value(tr.rate_valid);
  w.key("power_bound_ok");
  w.value(tr.power_bound_ok);
  w.key("mean_identity_ok");
  w.value(tr.mean_identity_ok);
  w.end_object();
  w.finish();
}

void write_trace_csv(std::ostream& out, const ErgodicTrace& tr) {
  out << "step,iterate_metric,mean_metric\n";
  for (std::size_t i = 0; i < tr.steps.size(); ++i)
    out << tr.steps[i] << ',' << format_real(tr.iterate_metric[i]) << ','
        << format_real(tr.mean_metric[i]) << '\n';
}

void write_spectral_json(std::ostream& out, const SpectralReport& r) {
  JsonWriter w(out);
  w.begin_object();
  w.key("t");
  w.value(r.t);
  w.key("N");
  w.value(r.N);
  w.key("mode");
  w.value(r.mode == Mode::Float ? "float" : "exact");
  w.key("cap");
  w.value(r.cap);
  w.key("domain");
  w.value(r.domain_label);
  w.key("eigenvalues");
  w.begin_array();
  for (auto v : r.eigenvalues) w.value(v);
  w.end_array();
  w.key("residuals");
  w.begin_array();
  for (auto v : r.residuals) w.value(v);
  w.end_array();
  w.key("max_residual");
  w.value(r.max_residual);
  w.key("diagonal_ok");
  w.value(r.diagonal_ok);
  if (r.mode == Mode::Exact) {
    w.key("residuals_exact_zero");
    w.value(r.residuals_exact_zero);
  }
  w.end_object();
  w.finish();
}

void write_spectral_csv(std::ostream& out, const SpectralReport& r) {
  out << "m,eigenvalue,residual\n";
  for (std::size_t m = 0; m < r.residuals.size(); ++m)
    out << m << ',' << format_real(r.eigenvalues[m]) << ','
        << format_real(r.residuals[m]) << '\n';
}

void write_bounds_json(std::ostream& out, const std::vector<BoundReport>& rs) {
  JsonWriter w(out);
  w.begin_object();
  w.key("reports");
  w.begin_array();
  for (const auto& r : rs) {
    w.begin_object();
    w.key("claim");
    w.value(r.claim);
    w.key("t");
    w.value(r.t);
    w.key("p");
    w.value(r.p);
    w.key("N");
    w.value(r.N);
    w.key("trials");
    w.value(r.trials);
    w.key("seed");
    w.value(static_cast<std::uint64_t>(r.seed));
    w.key("observed");
    w.value(r.observed);
    w.key("bound");
    w.value(r.bound);
    w.key("margin");
    w.value(r.margin);
    w.key("verdict");
    w.value(verdict_name(r.verdict));
    w.end_object();
  }
  w.end_array();
  w.end_object();
  w.finish();
}

void write_bounds_csv(std::ostream& out, const std::vector<BoundReport>& rs) {
  out << "claim,t,p,N,trials,seed,observed,bound,margin,verdict\n";
  for (const auto& r : rs)
    out << r.claim << ',' << format_real(r.t) << ',' << format_real(r.p) << ','
        << r.N << ',' << r.trials << ',' << r.seed << ','
        << format_real(r.observed) << ',' << format_real(r.bound) << ','
        << format_real(r.margin) << ',' << verdict_name(r.verdict) << '\n';
}

}  // namespace cesaro
