#include "propcalc/cli/io.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace propcalc::cli {

using scalars::Rat;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json load_json(const std::string& text_or_path) {
  const auto first = text_or_path.find_first_not_of(" \t\r\n");
  const bool inline_json = first != std::string::npos && (text_or_path[first] == '{' || text_or_path[first] == '[');
  const std::string text = inline_json ? text_or_path : read_file(text_or_path);
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

namespace {

int as_int(const json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

Rat as_rat(const json& j) {
  try {
    if (j.is_number_integer()) return Rat(j.get<long>());
    if (j.is_string()) return Rat::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  throw InputError("tensor values must be integers or rational strings");
}

std::vector<int> index_list(const json& j, int expected, int dim, const char* what) {
  if (!j.is_array() || static_cast<int>(j.size()) != expected)
    throw InputError(std::string(what) + " must be a list of " + std::to_string(expected) + " indices");
  std::vector<int> out;
  for (const auto& x : j) {
    const int v = as_int(x, what);
    if (v < 1 || v > dim) throw InputError(std::string(what) + " index " + std::to_string(v) + " out of range 1.." + std::to_string(dim));
    out.push_back(v - 1);
  }
  return out;
}

template <class S, class F>
ojson tensor_json(const teval::Tensor<S>& t, F&& show) {
  ojson entries = ojson::array();
  for (const auto& [k, v] : t.entries()) {
    ojson up = ojson::array(), down = ojson::array();
    for (int i = 0; i < t.p(); ++i) up.push_back(k[static_cast<std::size_t>(i)] + 1);
    for (int i = 0; i < t.q(); ++i) down.push_back(k[static_cast<std::size_t>(t.p() + i)] + 1);
    entries.push_back({{"up", up}, {"down", down}, {"val", show(v)}});
  }
  return {{"dim", t.dim()}, {"type", {t.p(), t.q()}}, {"entries", entries}};
}

template <class S, class F>
std::string tensor_text(const teval::Tensor<S>& t, F&& show) {
  std::string s = "dim " + std::to_string(t.dim()) + " type (" + std::to_string(t.p()) + "," + std::to_string(t.q()) + ")\n";
  if (t.is_zero()) return s + "0\n";
  for (const auto& [k, v] : t.entries()) {
    s += "[";
    for (std::size_t i = 0; i < k.size(); ++i) {
      if (static_cast<int>(i) == t.p()) s += ";";
      else if (i) s += ",";
      s += std::to_string(k[i] + 1);
    }
    if (static_cast<int>(k.size()) == t.p()) s += ";";
    s += "] " + show(v) + "\n";
  }
  return s;
}

}  // namespace

zideal::IdealData ideal_from_json(const json& j) {
  if (!j.is_object()) throw InputError("ideal must be a JSON object");
  for (const auto& [key, v] : j.items())
    if (key != "zero" && key != "f" && key != "C") throw InputError("unknown ideal field '" + key + "'");
  if (j.contains("zero")) {
    if (!j["zero"].is_boolean()) throw InputError("\"zero\" must be a boolean");
    if (j["zero"].get<bool>()) return zideal::IdealData::zero_ideal();
  }
  zideal::IdealData d;
  if (j.contains("f")) {
    if (!j["f"].is_string()) throw InputError("\"f\" must be a polynomial string");
    try {
      d.f = scalars::PolyT::parse(j["f"].get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  if (j.contains("C")) {
    if (!j["C"].is_array()) throw InputError("\"C\" must be a list of [i,j] boxes");
    for (const auto& b : j["C"]) {
      if (!b.is_array() || b.size() != 2) throw InputError("boxes must be [i,j] pairs");
      d.C.insert({as_int(b[0], "box row"), as_int(b[1], "box column")});
    }
  }
  try {
    d.check();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return d;
}

ojson ideal_to_json(const zideal::IdealData& ideal) {
  if (ideal.zero) return {{"zero", true}};
  ojson boxes = ojson::array();
  for (const auto& b : ideal.C) boxes.push_back({b.i, b.j});
  return {{"zero", false}, {"f", ideal.f.to_string()}, {"C", boxes}};
}

teval::RatTensor tensor_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("type")) throw InputError("tensor needs \"dim\" and \"type\"");
  const int dim = as_int(j["dim"], "dim");
  const json& type = j["type"];
  if (!type.is_array() || type.size() != 2) throw InputError("\"type\" must be [p,q]");
  const int p = as_int(type[0], "type"), q = as_int(type[1], "type");
  if (dim < 1 || p < 0 || q < 0) throw InputError("tensor shape out of range");
  teval::RatTensor t(dim, p, q);
  if (!j.contains("entries")) return t;
  if (!j["entries"].is_array()) throw InputError("\"entries\" must be a list");
  for (const auto& e : j["entries"]) {
    if (!e.is_object() || !e.contains("val")) throw InputError("tensor entry needs \"val\"");
    std::vector<int> k = index_list(e.value("up", json::array()), p, dim, "up");
    const std::vector<int> down = index_list(e.value("down", json::array()), q, dim, "down");
    k.insert(k.end(), down.begin(), down.end());
    t.add(k, as_rat(e["val"]));
  }
  return t;
}

ojson tensor_to_json(const teval::RatTensor& t) {
  return tensor_json(t, [](const Rat& v) { return v.to_string(); });
}
ojson tensor_to_json(const teval::PolyTensor& t) {
  return tensor_json(t, [](const scalars::MPoly& v) { return v.to_string(); });
}
std::string tensor_to_text(const teval::RatTensor& t) {
  return tensor_text(t, [](const Rat& v) { return v.to_string(); });
}
std::string tensor_to_text(const teval::PolyTensor& t) {
  return tensor_text(t, [](const scalars::MPoly& v) { return v.to_string(); });
}

teval::RatRep load_representation(const std::string& path, const diagram::Signature& sig) {
  const json j = load_json(path);
  if (!j.is_object()) throw InputError("representation must map generator names to tensors");
  const std::filesystem::path base = std::filesystem::path(path).parent_path();
  teval::RatRep rep;
  rep.sig = sig;
  rep.dim = -1;
  for (const auto& [name, v] : j.items()) {
    teval::RatTensor t;
    if (v.is_string()) t = tensor_from_json(load_json((base / v.get<std::string>()).string()));
    else t = tensor_from_json(v);
    if (rep.dim >= 0 && t.dim() != rep.dim) throw InputError("tensors in " + path + " have different dimensions");
    rep.dim = t.dim();
    rep.tensors.emplace(name, std::move(t));
  }
  if (rep.dim < 0) throw InputError("representation " + path + " is empty");
  rep.check();
  return rep;
}

ojson element_to_json(const wprop::PropElt& a) {
  ojson terms = ojson::array();
  for (const auto& [m, c] : a.terms()) terms.push_back({{"coeff", c.to_string()}, {"monomial", diagram::to_string(m)}});
  return {{"type", {a.p(), a.q()}}, {"expr", a.to_string()}, {"terms", terms}};
}

bool is_group_algebra_text(const std::string& text) {
  std::size_t pos = 0;
  while ((pos = text.find('[', pos)) != std::string::npos) {
    const auto close = text.find(']', pos);
    if (close == std::string::npos) return false;
    if (text.substr(pos, close - pos).find(';') == std::string::npos) return true;
    pos = close;
  }
  return false;
}

symgroup::GAElt parse_group_algebra(const std::string& text, int n) {
  struct Term {
    int sign;
    std::string coeff, perm;
  };
  std::vector<Term> terms;
  int depth = 0, sign = 1;
  std::string cur;
  auto flush = [&](std::size_t at) {
    const auto lb = cur.find('['), rb = cur.rfind(']');
    const bool blank = cur.find_first_not_of(" \t") == std::string::npos;
    if (blank) {
      if (!terms.empty() || at != 0) throw InputError("empty term in '" + text + "'");
      return;
    }
    if (lb == std::string::npos || rb == std::string::npos || rb < lb || cur.find_first_not_of(" \t", rb + 1) != std::string::npos)
      throw InputError("expected coeff*[permutation] in '" + cur + "'");
    std::string c = cur.substr(0, lb);
    while (!c.empty() && (std::isspace(static_cast<unsigned char>(c.back())) || c.back() == '*')) c.pop_back();
    terms.push_back({sign, c, cur.substr(lb + 1, rb - lb - 1)});
  };
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (depth == 0 && (ch == '+' || ch == '-')) {
      flush(i);
      cur.clear();
      sign = ch == '-' ? -1 : 1;
      continue;
    }
    cur.push_back(ch);
  }
  flush(text.size());
  if (terms.empty()) throw InputError("empty group algebra element");
  if (n <= 0) {
    n = 1;
    for (const auto& t : terms) {
      const bool cyc = t.perm.find('(') != std::string::npos;
      int digits = 0, num = 0;
      for (char ch : t.perm) {
        if (std::isdigit(static_cast<unsigned char>(ch))) {
          ++digits;
          num = num * 10 + (ch - '0');
        } else {
          n = std::max(n, num);
          num = 0;
        }
      }
      n = std::max(n, cyc ? num : digits);
    }
  }
  symgroup::GAElt z(n);
  try {
    for (const auto& t : terms) {
      scalars::PolyT c(1);
      if (!t.coeff.empty()) c = scalars::PolyT::parse(t.coeff);
      z.add(symgroup::Perm::parse(n, t.perm), c * scalars::PolyT(Rat(t.sign)));
    }
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return z;
}

}  // namespace propcalc::cli
