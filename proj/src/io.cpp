#include "symspec/io.hpp"

#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace symspec {
namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Content lines with their 1-based line numbers.
std::vector<std::pair<int, std::string_view>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> out;
  int number = 0;
  while (!text.empty()) {
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    line = trim(line);
    if (line.empty() || line.front() == '#') continue;
    out.emplace_back(number, line);
  }
  return out;
}

std::string where(int line) { return "line " + std::to_string(line) + ": "; }

long long parse_int(std::string_view s, const std::string& what) {
  long long v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc{} && p == s.data() + s.size(), what + ": expected an integer, got '" + std::string(s) + "'");
  return v;
}

double parse_double(std::string_view s, const std::string& what) {
  double v = 0;
  const auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc{} && p == s.data() + s.size(), what + ": expected a number, got '" + std::string(s) + "'");
  return v;
}

std::string format_double(double v) {
  char buf[64];
  const auto [p, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, p);
}

struct Header {
  int degree = 0;
  std::optional<DensityConvention> convention;
};

Header parse_header(int line, std::string_view text, bool allow_convention) {
  Header h;
  bool have_n = false;
  for (auto tok : split_ws(text)) {
    const auto eq = tok.find('=');
    require(eq != std::string_view::npos, where(line) + "header token '" + std::string(tok) + "' is not key=value");
    const auto key = tok.substr(0, eq), value = tok.substr(eq + 1);
    if (key == "n") {
      const auto n = parse_int(value, where(line) + "n");
      require(n >= 1 && n <= kMaxDenseDegree, where(line) + "n must be in [1, " + std::to_string(kMaxDenseDegree) + "]");
      h.degree = static_cast<int>(n);
      have_n = true;
    } else if (key == "convention" && allow_convention) {
      h.convention = parse_convention(value);
    } else {
      throw Error(where(line) + "unknown header key '" + std::string(key) + "'");
    }
  }
  require(have_n, where(line) + "header must set n=<degree>");
  return h;
}

}  // namespace

SetFamily parse_set_text(std::string_view text) {
  const auto lines = content_lines(text);
  require(!lines.empty(), "set file is empty; expected header \"n=<degree> convention=<Sn|An>\"");
  const Header h = parse_header(lines[0].first, lines[0].second, true);
  std::vector<Rank> ranks;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [line, body] = lines[k];
    Permutation p;
    try {
      p = parse_permutation(body, h.degree);
    } catch (const Error& e) {
      throw Error(where(line) + e.what());
    }
    require(p.degree() == h.degree, where(line) + "permutation degree differs from n");
    ranks.push_back(rank(p));
  }
  return SetFamily(h.degree, std::move(ranks), h.convention.value_or(DensityConvention::over_Sn));
}

std::string format_set(const SetFamily& s) {
  std::string out = "n=" + std::to_string(s.degree()) + " convention=" + to_string(s.convention()) + "\n";
  for (Rank r : s.members()) out += to_string(unrank(r, s.degree())) + "\n";
  return out;
}

GroupFunction parse_function_text(std::string_view text) {
  const auto lines = content_lines(text);
  require(!lines.empty(), "function file is empty; expected header \"n=<degree>\"");
  const int n = parse_header(lines[0].first, lines[0].second, false).degree;
  GroupFunction f(n);
  std::vector<bool> seen(f.size(), false);
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const auto [line, body] = lines[k];
    Rank r = 0;
    double value = 0;
    if (body.front() == '(') {
      const auto close = body.rfind(')');
      require(close != std::string_view::npos, where(line) + "unterminated cycle");
      try {
        r = rank(parse_permutation(body.substr(0, close + 1), n));
      } catch (const Error& e) {
        throw Error(where(line) + e.what());
      }
      value = parse_double(trim(body.substr(close + 1)), where(line) + "value");
    } else {
      const auto toks = split_ws(body);
      if (toks.size() == 2 && n != 1) {
        const auto v = parse_int(toks[0], where(line) + "rank");
        require(v >= 0 && static_cast<std::uint64_t>(v) < f.size(), where(line) + "rank out of range");
        r = static_cast<Rank>(v);
      } else if (static_cast<int>(toks.size()) == n + 1) {
        std::string perm;
        for (int i = 0; i < n; ++i) perm += std::string(toks[i]) + " ";
        if (n == 1 && toks[0] == "0") {
          r = 0;  // rank 0 and the permutation "1" coincide
        } else {
          try {
            const auto p = parse_permutation(perm, n);
            require(p.degree() == n, "permutation degree differs from n");
            r = rank(p);
          } catch (const Error& e) {
            throw Error(where(line) + e.what());
          }
        }
      } else {
        throw Error(where(line) + "expected \"rank value\" or " + std::to_string(n) + " images and a value");
      }
      value = parse_double(toks.back(), where(line) + "value");
    }
    require(!seen[r], where(line) + "rank " + std::to_string(r) + " listed twice");
    seen[r] = true;
    f[r] = value;
  }
  return f;
}

std::string format_function(const GroupFunction& f) {
  std::string out = "n=" + std::to_string(f.degree()) + "\n";
  for (Rank r = 0; r < f.size(); ++r) {
    if (f[r] != 0.0) out += std::to_string(r) + " " + format_double(f[r]) + "\n";
  }
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  require(static_cast<bool>(in), "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  require(static_cast<bool>(out), "cannot write '" + path + "'");
  out << text;
  require(static_cast<bool>(out), "write to '" + path + "' failed");
}

SetFamily read_set_file(const std::string& path) {
  try {
    return parse_set_text(read_text_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_set_file(const std::string& path, const SetFamily& s) { write_text_file(path, format_set(s)); }

GroupFunction read_function_file(const std::string& path) {
  try {
    return parse_function_text(read_text_file(path));
  } catch (const Error& e) {
    throw Error(path + ": " + e.what());
  }
}

void write_function_file(const std::string& path, const GroupFunction& f) {
  write_text_file(path, format_function(f));
}

CoeffMatrix read_matrix_file(const std::string& path) {
  const auto text = read_text_file(path);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(path + ": invalid JSON: " + e.what());
  }
  return coeff_matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const CoeffMatrix& m) {
  write_text_file(path, to_json(m).dump(2) + "\n");
}

}  // namespace symspec
