#pragma once

#include <cstddef>
#include <ostream>
#include <string>
#include <vector>

#include "cesaro/bounds.hpp"
#include "cesaro/ergodic.hpp"
#include "cesaro/numeric.hpp"
#include "cesaro/operators.hpp"
#include "cesaro/sequence.hpp"
#include "cesaro/spectral.hpp"

namespace cesaro {

// Sequence files are a single JSON array: reals, [re, im] pairs, or "num/den"
// strings (exact mode accepts integers and fraction strings only).
Sequence read_sequence_file(const std::string& path, Mode mode);
Sequence parse_sequence_text(const std::string& text, Mode mode);

// Deterministic JSON writer: insertion-ordered fields, floats at 17
// significant digits. The library's report serializer; parsing stays on the
// vendored reader.
class JsonWriter {
 public:
  explicit JsonWriter(std::ostream& out) : out_(out) {}

  void begin_object();
  void end_object();
  void begin_array();
  void end_array();
  void key(const std::string& k);
  void value(double v);
  void value(const std::string& v);
  void value(const char* v) { value(std::string(v)); }
  void value(bool v);
  void value(std::uint64_t v);
  void value(std::int64_t v);
  void value(const Complex& v);   // [re, im]
  void value(const Rational& v);  // "num/den"
  void raw(const std::string& token);
  void finish();  // trailing newline

 private:
  void separate();
  std::ostream& out_;
  std::vector<bool> first_in_scope_;
  bool pending_key_ = false;
};

// Sequence payload: bare JSON array so outputs can feed --input again. Float
// sequences print plain reals when every imaginary part is exactly zero.
void write_sequence_json(std::ostream& out, const Sequence& x);

void write_matrix_csv(std::ostream& out, const MatrixAny& m);
void write_trace_csv(std::ostream& out, const ErgodicTrace& tr);
void write_trace_json(std::ostream& out, const ErgodicTrace& tr);
void write_spectral_json(std::ostream& out, const SpectralReport& r);
void write_spectral_csv(std::ostream& out, const SpectralReport& r);
void write_bounds_json(std::ostream& out, const std::vector<BoundReport>& rs);
void write_bounds_csv(std::ostream& out, const std::vector<BoundReport>& rs);

}  // namespace cesaro
