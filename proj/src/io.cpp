#include "bkx/io.hpp"

#include <cctype>

#include "bkx/errors.hpp"

namespace bkx {

namespace {

// Recursive-descent evaluator producing symbols directly.
class ExpressionParser {
 public:
  explicit ExpressionParser(const std::string& text) : s_(text) {}

  MellinSymbol run() {
    MellinSymbol v = parse_sum();
    skip_ws();
    if (pos_ != s_.size()) fail("trailing input");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& why) {
    throw ParseError("at offset " + std::to_string(pos_) + ": " + why);
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  MellinSymbol parse_sum() {
    MellinSymbol acc = parse_product();
    while (true) {
      if (eat('+')) {
        acc = acc + parse_product();
      } else if (eat('-')) {
        acc = acc - parse_product();
      } else {
        return acc;
      }
    }
  }

  MellinSymbol parse_product() {
    MellinSymbol acc = parse_signed();
    while (true) {
      if (eat('*')) {
        acc = acc * parse_signed();
      } else if (eat('/')) {
        acc = acc / parse_signed();
      } else {
        return acc;
      }
    }
  }

  MellinSymbol parse_signed() {
    bool neg = false;
    while (true) {
      if (eat('-')) {
        neg = !neg;
      } else if (eat('+')) {
        // tolerated no-op
      } else {
        break;
      }
    }
    MellinSymbol v = parse_power();
    return neg ? -v : v;
  }

  MellinSymbol parse_power() {
    MellinSymbol base = parse_primary();
    if (!eat('^')) return base;
    const long e = parse_exponent();
    MellinSymbol acc = MellinSymbol::one();
    MellinSymbol b = e < 0 ? MellinSymbol::one() / base : base;
    for (long i = 0; i < (e < 0 ? -e : e); ++i) acc = acc * b;
    return acc;
  }

  long parse_exponent() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
      fail("expected an integer exponent");
    long v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_] - '0');
      if (v > 100000) fail("exponent too large");
      ++pos_;
    }
    return neg ? -v : v;
  }

  MellinSymbol parse_primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MellinSymbol v = parse_sum();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      mpz_class z(s_.substr(start, pos_ - start));
      return MellinSymbol::from_scalar(ScalarQV(mpq_class(z)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const size_t start = pos_;
      while (pos_ < s_.size() &&
             (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
        ++pos_;
      const std::string word = s_.substr(start, pos_ - start);
      if (word == "q") return MellinSymbol::from_scalar(ScalarQV::q_power(1));
      if (word == "q_half") return MellinSymbol::from_scalar(ScalarQV::v_power(1));
      if (word == "U") return MellinSymbol::u_power(1);
      fail("unknown token '" + word + "'");
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  const std::string& s_;
  size_t pos_ = 0;
};

ScalarQV json_scalar(const nlohmann::json& v) {
  if (v.is_number_integer()) return ScalarQV(v.get<long>());
  if (v.is_string()) return parse_scalar_expression(v.get<std::string>());
  throw SchemaError("coefficient entries must be strings or integers");
}

int json_int(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw SchemaError(std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::string json_string(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_string())
    throw SchemaError(std::string("missing string field '") + key + "'");
  return j[key].get<std::string>();
}

}  // namespace

MellinSymbol parse_symbol_expression(const std::string& text) {
  return ExpressionParser(text).run();
}

ScalarQV parse_scalar_expression(const std::string& text) {
  const MellinSymbol sym = ExpressionParser(text).run();
  if (sym.is_zero()) return ScalarQV(0);
  if (sym.floor() != 0 || sym.num().degree() != 0 || !sym.is_laurent_polynomial())
    throw ParseError("expected a scalar, found a dependence on U");
  return sym.num().coeff(0);
}

nlohmann::ordered_json coefficient_function_to_json(const CoefficientFunction& f) {
  nlohmann::ordered_json j;
  j["n"] = f.n();
  if (f.is_finite_form()) {
    j["kind"] = "finite";
    j["floor"] = f.floor();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    if (!f.is_zero()) {
      const int hi = f.floor() + f.symbol().num().degree();
      for (const auto& c : f.coefficients(hi)) arr.push_back(c.to_string());
    }
    j["coeffs"] = std::move(arr);
  } else {
    j["kind"] = "rational";
    j["floor"] = f.floor();
    j["num"] = f.symbol().num_string();
    j["den"] = f.symbol().den_string();
    nlohmann::ordered_json preview;
    preview["first"] = f.floor();
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : f.coefficients(f.floor() + 7)) arr.push_back(c.to_string());
    preview["coeffs"] = std::move(arr);
    j["preview"] = std::move(preview);
  }
  return j;
}

CoefficientFunction coefficient_function_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  const int n = json_int(j, "n");
  if (n < 1 || n > 8) throw SchemaError("n out of range [1,8]");
  const std::string kind = json_string(j, "kind");
  const int declared_floor = json_int(j, "floor");
  if (kind == "finite") {
    if (!j.contains("coeffs") || !j["coeffs"].is_array())
      throw SchemaError("missing array field 'coeffs'");
    std::vector<ScalarQV> coeffs;
    for (const auto& v : j["coeffs"]) coeffs.push_back(json_scalar(v));
    CoefficientFunction f = CoefficientFunction::finite(n, declared_floor, coeffs);
    if (!f.is_zero() && f.floor() < declared_floor)
      throw SchemaError("declared floor is not a lower bound of the support");
    return f;
  }
  if (kind == "rational") {
    const MellinSymbol num = parse_symbol_expression(json_string(j, "num"));
    const MellinSymbol den = parse_symbol_expression(json_string(j, "den"));
    const MellinSymbol sym = num / den;
    if (sym.floor() != declared_floor && !sym.is_zero())
      throw SchemaError("declared floor does not match the expansion floor");
    return CoefficientFunction::rational(n, sym);
  }
  throw SchemaError("kind must be 'finite' or 'rational'");
}

std::string serialize_coefficient_function(const CoefficientFunction& f) {
  return coefficient_function_to_json(f).dump(2) + "\n";
}

CoefficientFunction parse_coefficient_function(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return coefficient_function_from_json(j);
}

SymplecticMatrix matrix_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw SchemaError("expected a JSON object");
  const int n = json_int(j, "n");
  if (!j.contains("entries") || !j["entries"].is_array())
    throw SchemaError("missing array field 'entries'");
  std::vector<std::vector<mpq_class>> entries;
  for (const auto& row : j["entries"]) {
    if (!row.is_array()) throw SchemaError("entries must be an array of arrays");
    std::vector<mpq_class> out;
    for (const auto& v : row) {
      if (v.is_number_integer()) {
        out.emplace_back(v.get<long>());
      } else if (v.is_string()) {
        try {
          mpq_class x(v.get<std::string>());
          if (x.get_den() == 0)
            throw ParseError("bad rational entry '" + v.get<std::string>() + "'");
          x.canonicalize();
          out.push_back(std::move(x));
        } catch (const std::invalid_argument&) {
          throw ParseError("bad rational entry '" + v.get<std::string>() + "'");
        }
      } else {
        throw SchemaError("matrix entries must be strings or integers");
      }
    }
    entries.push_back(std::move(out));
  }
  return SymplecticMatrix::from_entries(n, std::move(entries));
}

SymplecticMatrix parse_matrix(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
  return matrix_from_json(j);
}

}  // namespace bkx
