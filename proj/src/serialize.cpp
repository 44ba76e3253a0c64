#include "freealg/serialize.hpp"

#include <ostream>

namespace freealg {

OrderedJson poly_to_json(const NCPoly& p) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [w, c] : p.terms()) {
    OrderedJson term;
    term["word"] = w.str();
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  return terms;
}

NCPoly poly_from_json(const OrderedJson& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial json must be an array");
  NCPoly p;
  for (const auto& term : j) {
    std::string word = term.at("word").get<std::string>();
    std::string coeff = term.at("coeff").get<std::string>();
    Word w = (word == "1") ? Word() : Word::from_letters(word);
    p.add_term(w, Rational::from_string(coeff));
  }
  return p;
}

OrderedJson formal_to_json(const FormalPoly& fp, const GeneratorTable& table) {
  OrderedJson terms = OrderedJson::array();
  for (const auto& [prod, c] : fp.terms()) {
    OrderedJson term;
    OrderedJson factors = OrderedJson::array();
    for (std::size_t idx : prod) factors.push_back(table.entries()[idx].bw.str());
    term["factors"] = std::move(factors);
    term["coeff"] = c.str();
    terms.push_back(std::move(term));
  }
  return terms;
}

OrderedJson table_to_json(const GeneratorTable& table, bool include_values) {
  OrderedJson entries = OrderedJson::array();
  for (const auto& e : table.entries()) {
    OrderedJson entry;
    entry["generator"] = e.bw.str();
    entry["weight"] = e.weight;
    entry["leading_monomial"] = e.lm.str();
    if (include_values) entry["value"] = poly_to_json(e.value);
    entries.push_back(std::move(entry));
  }
  return entries;
}

void render_text(const OrderedJson& v, std::ostream& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_object() || value.is_array()) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump())
            << "\n";
      }
    }
  } else if (v.is_array()) {
    for (const auto& value : v) {
      if (value.is_object() || value.is_array()) {
        out << pad << "-\n";
        render_text(value, out, indent + 2);
      } else {
        out << pad << "- "
            << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else {
    out << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace freealg
